#include "fusionscope/group_recovery.hpp"

#include <algorithm>
#include <sstream>

#include "fusionscope/disjoint_set.hpp"
#include "fusionscope/errors.hpp"

namespace fusionscope {

std::vector<Index> invertible_indices(const FusionRing& ring) {
  std::vector<Index> out;
  for (Index p = 0; p < ring.rank(); ++p) {
    if (!ring.pair_complete(p, ring.dual(p))) continue;
    auto prod = ring.product(p, ring.dual(p));
    if (prod.size() == 1 && prod[0].irrep == ring.unit() && prod[0].mult == 1) out.push_back(p);
  }
  return out;
}

AbelianGroupStructure invertible_characters(const FusionRing& ring) {
  const auto members = invertible_indices(ring);
  const int n = static_cast<int>(members.size());
  std::vector<int> position(ring.rank(), -1);
  for (int i = 0; i < n; ++i) position[members[i]] = i;

  GroupTable table(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Index p = members[i];
      const Index q = members[j];
      if (!ring.pair_complete(p, q))
        throw AxiomViolation("product of invertibles " + ring.label(p) + ", " + ring.label(q) +
                             " is clipped by truncation");
      auto prod = ring.product(p, q);
      if (prod.size() != 1 || prod[0].mult != 1 || position[prod[0].irrep] < 0)
        throw AxiomViolation("product of invertibles " + ring.label(p) + " and " + ring.label(q) +
                             " is not an invertible basis element");
      table[i][j] = position[prod[0].irrep];
    }
  }
  std::vector<std::string> names;
  for (Index p : members) names.push_back(ring.label(p));
  try {
    return make_abelian_group(std::move(names), std::move(table), position[ring.unit()]);
  } catch (const NotAGroup& e) {
    throw AxiomViolation(std::string("invertible characters do not form a group: ") + e.what());
  }
}

ChainGroupResult chain_group(const FusionRing& ring) {
  const int n = ring.rank();
  DisjointSet sets(n);
  for (Index p = 0; p < n; ++p) {
    for (Index q = p; q < n; ++q) {
      if (!ring.pair_complete(p, q)) continue;
      auto prod = ring.product(p, q);
      for (std::size_t i = 1; i < prod.size(); ++i) sets.unite(prod[0].irrep, prod[i].irrep);
    }
  }

  ChainGroupResult out;
  out.class_of.assign(n, -1);
  std::vector<int> class_of_root(n, -1);
  for (Index p = 0; p < n; ++p) {
    const int root = sets.find(p);
    if (class_of_root[root] < 0) {
      class_of_root[root] = static_cast<int>(out.classes.size());
      out.classes.emplace_back();
    }
    out.class_of[p] = class_of_root[root];
    out.classes[out.class_of[p]].push_back(p);
  }

  const int k = static_cast<int>(out.classes.size());
  GroupTable table(k, std::vector<int>(k, -1));
  for (Index p = 0; p < n; ++p) {
    for (Index q = 0; q < n; ++q) {
      if (!ring.pair_complete(p, q)) continue;
      int& slot = table[out.class_of[p]][out.class_of[q]];
      for (const auto& c : ring.product(p, q)) {
        const int cls = out.class_of[c.irrep];
        if (slot >= 0 && slot != cls) {
          std::ostringstream os;
          os << "chain group product is not well defined: " << ring.label(p) << " * " << ring.label(q)
             << " contains " << ring.label(c.irrep) << " from a different class";
          throw InternalConsistency(os.str());
        }
        slot = cls;
      }
    }
  }
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (table[a][b] < 0)
        throw InternalConsistency("no complete product represents the class pair (" + ring.label(out.classes[a][0]) +
                                  ", " + ring.label(out.classes[b][0]) + "); truncation too tight");

  std::vector<std::string> names;
  for (const auto& cls : out.classes) names.push_back("<" + ring.label(cls.front()) + ">");
  try {
    out.group = make_abelian_group(std::move(names), std::move(table), out.class_of[ring.unit()]);
  } catch (const NotAGroup& e) {
    throw InternalConsistency(std::string("chain classes do not form a group: ") + e.what());
  }
  for (Index p = 0; p < n; ++p) {
    if (out.class_of[ring.dual(p)] != out.group.inverse(out.class_of[p]))
      throw InternalConsistency("class of dual(" + ring.label(p) + ") is not the inverse class");
  }
  return out;
}

AbelianGroupStructure center_dual(const FusionRing& ring) { return chain_group(ring).group; }

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::not_applicable:
      return "not-applicable";
  }
  return "?";
}

CenterCheck check_oddfusion_pseudoreal_center(const FusionRing& ring,
                                              const std::map<Index, FsIndicator>& fs_indicators) {
  for (const auto& [p, fs] : fs_indicators) {
    if (p < 0 || p >= ring.rank()) throw MalformedInput("FS indicator for an out-of-range irrep");
    const bool self_dual = ring.dual(p) == p;
    if (self_dual == (fs == FsIndicator::complex))
      throw MalformedInput("FS indicator '" + std::string(to_string(fs)) + "' on " + ring.label(p) +
                           " contradicts its duality (" + (self_dual ? "self-dual" : "not self-dual") + ")");
  }

  CenterCheck out;
  out.all_multiplicities_odd = true;
  for (const auto& e : ring.entries()) {
    if (e.m % 2 == 0) {
      out.all_multiplicities_odd = false;
      out.even_witness = e;
      break;
    }
  }
  for (const auto& [p, fs] : fs_indicators)
    if (fs == FsIndicator::pseudoreal) out.pseudoreal.push_back(p);

  std::ostringstream os;
  if (!out.all_multiplicities_odd || out.pseudoreal.empty()) {
    out.status = CheckStatus::not_applicable;
    if (!out.all_multiplicities_odd) {
      const auto& e = *out.even_witness;
      os << "hypothesis fails: N^" << ring.label(e.r) << "_{" << ring.label(e.p) << "," << ring.label(e.q)
         << "} = " << e.m << " is even";
    } else {
      os << "hypothesis fails: no pseudo-real irrep";
    }
    out.summary = os.str();
    return out;
  }

  const auto chain = chain_group(ring);
  out.chain_group_order = chain.group.order();
  out.status = chain.group.order() > 1 ? CheckStatus::pass : CheckStatus::fail;
  os << "all nonzero multiplicities odd, pseudo-real irrep " << ring.label(out.pseudoreal.front())
     << "; chain group " << describe_factors(chain.group.invariant_factors)
     << (out.status == CheckStatus::pass ? " is nontrivial" : " is trivial, contradicting the proposition");
  out.summary = os.str();
  return out;
}

CenterCheck check_oddfusion_pseudoreal_center(const FusionRing& ring) {
  std::map<Index, FsIndicator> fs;
  for (const auto& [label, value] : ring.metadata().fs_indicators) fs.emplace(*ring.find_label(label), value);
  return check_oddfusion_pseudoreal_center(ring, fs);
}

}  // namespace fusionscope
