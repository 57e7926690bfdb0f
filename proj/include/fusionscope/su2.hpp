#pragma once

// SU(2) Clebsch-Gordan series from dimension data alone.
//
// The only inputs are: exactly one irrep D_j of each dimension 2j + 1,
// hence every D_j is self-dual and D_j (x) D_j' contains D_0 iff j = j',
// exactly once.  From this the decomposition of D_1/2 (x) D_k is derived by
// induction on k, powers of chi_1/2 are expanded, irreducible characters
// are written as polynomials in chi_1/2, and the general product follows.
//
// The closed form for chi_1/2^n sums i = 1 .. floor(n/2).  Stopping at
// floor(n/2 - 1) drops the chi_0 term for even n: chi_1/2^4 needs
// (C(4,2) - C(4,1)) chi_0 = 2 chi_0.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fusionscope/abelian_group.hpp"
#include "fusionscope/fusion_ring.hpp"

namespace fusionscope::su2 {

using BigInt = boost::multiprecision::cpp_int;

/// Spin j stored as 2j.
struct SpinIndex {
  int twice_j = 0;

  int dimension() const { return twice_j + 1; }
  bool is_integer() const { return twice_j % 2 == 0; }
  /// "0", "1/2", "1", "3/2", ...
  std::string to_string() const;
  /// Accepts "2", "5/2", "2.5"; throws MalformedInput.
  static SpinIndex parse(std::string_view text);

  auto operator<=>(const SpinIndex&) const = default;
};

/// Finitely supported integer combination of the chi_j.
class SU2Character {
 public:
  SU2Character() = default;
  static SU2Character irrep(SpinIndex j);

  const std::map<SpinIndex, BigInt>& coeffs() const { return coeffs_; }
  BigInt coefficient(SpinIndex j) const;
  void add(SpinIndex j, const BigInt& m);
  /// sum of m_j (2j + 1)
  BigInt dimension() const;
  std::string to_string() const;

  friend SU2Character operator+(const SU2Character& a, const SU2Character& b);
  friend SU2Character operator*(const BigInt& k, const SU2Character& a);
  bool operator==(const SU2Character&) const = default;

 private:
  std::map<SpinIndex, BigInt> coeffs_;  // zero coefficients are never stored
};

BigInt binomial(int n, int k);

struct HalfTensorStep {
  SpinIndex k;
  /// multiplicities of D_1/2 (x) D_k
  std::map<SpinIndex, int> decomposition;
  /// multisets that satisfied all constraints (must be exactly 1)
  std::size_t candidates = 0;
};

/// Derives D_1/2 (x) D_k for 2k = 0 .. max_twice_j by constraint search:
/// the multiplicity of D_j, j < k, equals that of D_0 in
/// D_j (x) D_1/2 (x) D_k, read off the already derived rows; the rest of
/// the dimension 2(2k + 1) is filled with every multiset of D_j, j >= k.
/// Throws DerivationFailure unless each step has exactly one candidate and
/// it equals D_k-1/2 (+) D_k+1/2.
std::vector<HalfTensorStep> derive_half_tensor(int max_twice_j);

/// chi_1/2^n by the closed form (summation up to floor(n/2)).
SU2Character chi_half_power(int n);

/// chi_j = sum_i (-1)^i C(2j - i, i) chi_1/2^(2j - 2i), keyed by the power.
std::map<int, BigInt> chi_in_half_powers(SpinIndex j);

/// Replaces each chi_1/2^m by chi_half_power(m).
SU2Character substitute_half_powers(const std::map<int, BigInt>& expansion);

/// chi_|j-j2| + ... + chi_j+j2.
SU2Character cg_closed_form(SpinIndex j, SpinIndex j2);

/// chi_j * chi_j2 via the half-power route, checked against the closed form.
/// Throws InternalConsistency on disagreement.
SU2Character cg_product(SpinIndex j, SpinIndex j2);

/// 2j mod 2: class 0 is the identity.
int parity_class(SpinIndex j);

/// Z2 with elements "<0>" and "<1/2>".
AbelianGroupStructure parity_grading();

/// Irreps with 2j <= max_twice_j, basis index = 2j, products clipped above
/// max_twice_j and complete_below = max_twice_j.  Metadata asserts
/// connectedness and the Frobenius-Schur indicators (-1)^(2j).
FusionRing export_truncated_ring(int max_twice_j);

/// Catalog name of a truncated export, e.g. "SU2-trunc-jmax5" or "SU2-trunc-jmax2.5".
std::string truncated_ring_name(int max_twice_j);

}  // namespace fusionscope::su2
