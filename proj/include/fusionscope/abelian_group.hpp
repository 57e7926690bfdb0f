#pragma once

#include <string>
#include <vector>

namespace fusionscope {

using GroupTable = std::vector<std::vector<int>>;

/// Finite abelian group given by its multiplication table, together with
/// its invariant factors d_1 | d_2 | ... | d_k (empty for the trivial group).
struct AbelianGroupStructure {
  std::vector<std::string> elements;
  GroupTable table;
  int identity = 0;
  std::vector<int> invariant_factors;

  int order() const { return static_cast<int>(elements.size()); }
  int inverse(int x) const;
  int element_order(int x) const;
};

/// Exhaustively checks closure, identity, inverses, associativity and
/// commutativity.  Throws NotAGroup naming the first failure.
void check_abelian_group_axioms(const GroupTable& table, int identity);

/// Invariant factors from the element-order census: for each prime p the
/// counts #{x : x^(p^k) = 1} = p^(sum_i min(e_i, k)) fix the p-primary
/// exponents, which are then recombined into d_1 | ... | d_k.
std::vector<int> identify_invariant_factors(const GroupTable& table, int identity);

/// Validates the table and fills in the invariant factors.
AbelianGroupStructure make_abelian_group(std::vector<std::string> elements, GroupTable table, int identity);

/// "trivial", "Z6", "Z2 x Z2", ...
std::string describe_factors(const std::vector<int>& factors);

}  // namespace fusionscope
