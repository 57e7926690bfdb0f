#pragma once

// Independent reference computations for the tests.  Nothing here calls
// into the library's algorithms; library types appear only as inputs or as
// containers for handing data over.

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "fusionscope/fusion_ring.hpp"

namespace oracle {

using BigInt = boost::multiprecision::cpp_int;

std::string data_path(std::string_view relative);
nlohmann::json load_json(const std::string& path);
std::string read_text(const std::string& path);

/// Finite-group fixture names, in catalog order.
const std::vector<std::string>& group_names();

/// Dense fusion tensor n[p][q][r].
struct Dense {
  int rank = 0;
  int unit = 0;
  std::vector<int> dual;
  std::optional<int> complete_below;
  std::vector<std::int64_t> n;

  std::int64_t at(int p, int q, int r) const { return n[(static_cast<std::size_t>(p) * rank + q) * rank + r]; }
  /// Sets both (p, q, r) and (q, p, r).
  void set(int p, int q, int r, std::int64_t m);
  bool complete(int p, int q) const { return !complete_below || p + q <= *complete_below; }
};

Dense dense_from_json(const nlohmann::json& doc);
Dense load_group_dense(std::string_view name);
/// SU(2) irreps 2j = 0 .. max_twice_j from |j - j2| <= J <= j + j2.
Dense su2_dense(int max_twice_j);
/// Character group of Z_n: basis k, chi_p chi_q = chi_{p+q mod n}.
Dense cyclic_dense(int n);

/// Library ring with the same data; labels are "0", "1", ...
fusionscope::FusionRing to_library(const Dense& d, std::string name = "oracle");
std::vector<std::string> labels_of(const nlohmann::json& doc);

bool dual_involution_ok(const Dense& d);
bool unit_law_ok(const Dense& d);
bool duality_ok(const Dense& d);
bool associativity_ok(const Dense& d);
bool all_axioms_ok(const Dense& d);
/// True iff the witness really breaks the named axiom in d.
bool witness_fails(const Dense& d, fusionscope::Axiom axiom, const std::array<int, 4>& w);

std::vector<std::int64_t> multiply(const Dense& d, const std::vector<std::int64_t>& a,
                                   const std::vector<std::int64_t>& b);
std::vector<std::int64_t> dual_of(const Dense& d, const std::vector<std::int64_t>& a);

/// perm maps basis of a onto basis of b preserving unit, dual and tensor.
bool is_isomorphism(const Dense& a, const Dense& b, const std::vector<int>& perm);
/// Every such permutation, by exhausting all rank! candidates.
std::vector<std::vector<int>> all_isomorphisms(const Dense& a, const Dense& b);

/// Every subset containing the unit closed under duals and constituents
/// (of complete and clipped products alike), each sorted, by exhausting
/// all 2^(rank-1) subsets.
std::vector<std::vector<int>> all_subrings(const Dense& d);
/// Worklist closure of seed.
std::vector<int> closure(const Dense& d, const std::vector<int>& seed);

/// Residual of the character system over complete pairs.
double character_residual(const Dense& d, const std::vector<std::complex<double>>& alpha);
/// All vectors in 1..bound with alpha_unit = 1 solving the complete part
/// of the character system, by exhausting bound^(rank-1) candidates.
std::vector<std::vector<std::int64_t>> brute_integer_solutions(const Dense& d, std::int64_t bound);

/// Column q of M_p, i.e. (M_p)_{r,q} = N^r_{p,q}.
std::vector<std::vector<std::int64_t>> fusion_matrix(const Dense& d, int p);
/// Characteristic polynomial coefficients c_0 .. c_n (monic, c_n = 1) by
/// the Faddeev-LeVerrier recursion in exact integers.
std::vector<BigInt> characteristic_polynomial(const std::vector<std::vector<std::int64_t>>& m);
/// Largest real root of a polynomial with real roots, by bisection.
double largest_real_root(const std::vector<BigInt>& coeffs);

/// Character-table columns from the oracle file.
std::vector<std::vector<std::complex<double>>> oracle_columns(std::string_view group);
/// Equal as sets, entrywise within tol.
bool same_column_sets(std::vector<std::vector<std::complex<double>>> a,
                      std::vector<std::vector<std::complex<double>>> b, double tol);

// Finite abelian groups by multiplication table.
using Table = std::vector<std::vector<int>>;
/// Z_{f1} x Z_{f2} x ..., elements in mixed-radix order, identity 0.
Table cyclic_product_table(const std::vector<int>& factors);
/// Relabels elements by perm (which fixes 0).
Table relabel(const Table& t, const std::vector<int>& perm);
/// Brute force over bijections fixing the identity 0.
bool tables_isomorphic(const Table& a, const Table& b);

// SU(2) characters as maps 2j -> multiplicity.
using SpinSum = std::map<int, BigInt>;
/// chi * chi_1/2 using only D_1/2 (x) D_j = D_j-1/2 (+) D_j+1/2.
SpinSum times_half(const SpinSum& chi);
/// chi_1/2^n by n-fold iterated multiplication.
SpinSum half_power(int n);
/// chi_j chi_j2 by multiplying weight polynomials sum_m z^(2m) and peeling
/// off highest weights.
SpinSum weight_product(int twice_j, int twice_j2);

}  // namespace oracle
