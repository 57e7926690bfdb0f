#include "fusionscope/subrings.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>

#include "fusionscope/char_solver.hpp"
#include "fusionscope/errors.hpp"

namespace fusionscope {

namespace {

using Mask = std::uint64_t;

constexpr int kMaskBits = 64;

Mask to_mask(std::span<const Index> basis) {
  Mask m = 0;
  for (Index p : basis) m |= Mask{1} << p;
  return m;
}

std::vector<Index> from_mask(Mask m) {
  std::vector<Index> out;
  for (Index p = 0; p < kMaskBits; ++p)
    if (m >> p & 1) out.push_back(p);
  return out;
}

Mask close_mask(const FusionRing& ring, Mask seed) {
  Mask in = seed | Mask{1} << ring.unit();
  std::vector<Index> work = from_mask(in);
  auto add = [&](Index r) {
    if (!(in >> r & 1)) {
      in |= Mask{1} << r;
      work.push_back(r);
    }
  };
  for (std::size_t i = 0; i < work.size(); ++i) {
    const Index p = work[i];
    add(ring.dual(p));
    // members are only appended, so every pair is visited once from its later element
    for (std::size_t j = 0; j <= i; ++j)
      for (const auto& c : ring.product(p, work[j])) add(c.irrep);
  }
  return in;
}

void require_rank(const FusionRing& ring, const SearchLimits& limits, const char* what) {
  if (ring.rank() > limits.max_rank || ring.rank() > kMaskBits)
    throw ResourceLimit(std::string(what) + ": rank " + std::to_string(ring.rank()) + " exceeds the bound " +
                        std::to_string(std::min(limits.max_rank, kMaskBits)));
}

}  // namespace

bool RepresentationSubring::contains(Index p) const { return std::binary_search(basis.begin(), basis.end(), p); }

RepresentationSubring close(const FusionRing& ring, std::span<const Index> seed) {
  if (ring.rank() > kMaskBits) throw ResourceLimit("closure supports rank <= 64");
  for (Index p : seed)
    if (p < 0 || p >= ring.rank()) throw UsageError("seed index out of range");
  return {&ring, from_mask(close_mask(ring, to_mask(seed)))};
}

bool is_subring(const FusionRing& ring, std::span<const Index> basis) {
  std::set<Index> in(basis.begin(), basis.end());
  if (!in.contains(ring.unit())) return false;
  for (Index p : in) {
    if (!in.contains(ring.dual(p))) return false;
    for (Index q : in)
      for (const auto& c : ring.product(p, q))
        if (!in.contains(c.irrep)) return false;
  }
  return true;
}

std::optional<int> SubringLattice::find(std::span<const Index> basis) const {
  for (std::size_t i = 0; i < subrings.size(); ++i)
    if (std::equal(basis.begin(), basis.end(), subrings[i].basis.begin(), subrings[i].basis.end()))
      return static_cast<int>(i);
  return std::nullopt;
}

SubringLattice enumerate_subrings(const FusionRing& ring, const SearchLimits& limits) {
  require_rank(ring, limits, "subring enumeration");
  const int n = ring.rank();

  std::set<Mask> singles;
  singles.insert(close_mask(ring, 0));
  for (Index p = 0; p < n; ++p) singles.insert(close_mask(ring, Mask{1} << p));

  std::set<Mask> found(singles.begin(), singles.end());
  std::vector<Mask> work(found.begin(), found.end());
  while (!work.empty()) {
    const Mask x = work.back();
    work.pop_back();
    for (Mask s : singles) {
      if ((x | s) == x) continue;
      const Mask joined = close_mask(ring, x | s);
      if (found.insert(joined).second) work.push_back(joined);
    }
  }

  std::vector<std::vector<Index>> bases;
  for (Mask m : found) bases.push_back(from_mask(m));
  std::sort(bases.begin(), bases.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });

  SubringLattice out;
  for (auto& b : bases) out.subrings.push_back({&ring, std::move(b)});
  const int k = static_cast<int>(out.subrings.size());
  for (int i = 0; i < k; ++i) {
    const Mask mi = to_mask(out.subrings[i].basis);
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      const Mask mj = to_mask(out.subrings[j].basis);
      if ((mi & mj) == mi) out.inclusion.emplace_back(i, j);
    }
  }
  return out;
}

FusionRing quotient_ring(const RepresentationSubring& sub) {
  const FusionRing& ring = *sub.ring;
  const int m = static_cast<int>(sub.basis.size());
  std::vector<Index> position(ring.rank(), -1);
  for (int i = 0; i < m; ++i) position[sub.basis[i]] = i;

  std::vector<std::string> labels;
  std::vector<Index> dual;
  for (Index p : sub.basis) {
    labels.push_back(ring.label(p));
    if (position[ring.dual(p)] < 0) throw UsageError("basis is not closed under duals");
    dual.push_back(position[ring.dual(p)]);
  }
  std::vector<FusionEntry> entries;
  for (const auto& e : ring.entries()) {
    if (position[e.p] < 0 || position[e.q] < 0) continue;
    if (position[e.r] < 0) throw UsageError("basis is not closed under products");
    entries.push_back({position[e.p], position[e.q], position[e.r], e.m});
  }

  RingMetadata meta;
  meta.connected = ring.metadata().connected;
  for (const auto& [label, fs] : ring.metadata().fs_indicators)
    if (position[*ring.find_label(label)] >= 0) meta.fs_indicators.emplace(label, fs);
  if (ring.is_truncated()) {
    // the reindexed completeness pattern must again be an index-sum bound
    bool all_complete = true;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) all_complete = all_complete && ring.pair_complete(sub.basis[i], sub.basis[j]);
    if (!all_complete) {
      std::optional<int> bound;
      for (int b = 0; b <= 2 * m && !bound; ++b) {
        bool matches = true;
        for (int i = 0; i < m && matches; ++i)
          for (int j = 0; j < m && matches; ++j)
            matches = ring.pair_complete(sub.basis[i], sub.basis[j]) == (i + j <= b);
        if (matches) bound = b;
      }
      if (!bound) throw UsageError("truncation pattern of the quotient is not an index-sum bound");
      meta.complete_below = bound;
    }
  }

  std::string name = ring.name() + "/[";
  for (int i = 0; i < m; ++i) name += (i ? "," : "") + labels[i];
  name += "]";
  return FusionRing(std::move(name), std::move(labels), position[ring.unit()], std::move(dual), std::move(entries),
                    std::move(meta));
}

RepresentationSubring adjoint_subring(const FusionRing& ring) {
  std::vector<Index> seed;
  for (Index p = 0; p < ring.rank(); ++p)
    for (const auto& c : ring.product(p, ring.dual(p))) seed.push_back(c.irrep);
  return close(ring, seed);
}

// ------------------------------------------------------ isomorphisms

bool is_order_isomorphism(const FusionRing& source, const FusionRing& target, std::span<const Index> perm) {
  const int n = source.rank();
  if (target.rank() != n || static_cast<int>(perm.size()) != n) return false;
  std::vector<bool> used(n, false);
  for (Index x : perm) {
    if (x < 0 || x >= n || used[x]) return false;
    used[x] = true;
  }
  if (perm[source.unit()] != target.unit()) return false;
  for (Index p = 0; p < n; ++p)
    if (perm[source.dual(p)] != target.dual(perm[p])) return false;
  for (Index p = 0; p < n; ++p)
    for (Index q = 0; q < n; ++q) {
      auto a = source.product(p, q);
      auto b = target.product(perm[p], perm[q]);
      if (a.size() != b.size()) return false;
      for (const auto& c : a)
        if (target.multiplicity(perm[p], perm[q], perm[c.irrep]) != c.mult) return false;
    }
  return true;
}

namespace {

/// Isomorphism invariants of a basis element.
struct Fingerprint {
  long long fp_dim = 0;
  bool self_dual = false;
  bool is_unit = false;
  std::vector<Multiplicity> row;     // sorted N^r_{p,q} over (q, r)
  std::vector<Multiplicity> column;  // sorted N^p_{q,r} over (q, r)

  auto operator<=>(const Fingerprint&) const = default;
};

std::vector<Fingerprint> fingerprints(const FusionRing& ring) {
  const int n = ring.rank();
  std::vector<double> dims;
  try {
    dims = fp_dimensions(ring).values;
  } catch (const Error&) {
    dims.assign(n, 0.0);  // unvalidated input: fall back to combinatorial invariants only
  }
  std::vector<Fingerprint> out(n);
  for (Index p = 0; p < n; ++p) {
    auto& f = out[p];
    f.fp_dim = std::llround(dims[p] * 1e6);
    f.self_dual = ring.dual(p) == p;
    f.is_unit = p == ring.unit();
    for (Index q = 0; q < n; ++q)
      for (const auto& c : ring.product(p, q)) f.row.push_back(c.mult);
    std::sort(f.row.begin(), f.row.end());
  }
  for (Index q = 0; q < n; ++q)
    for (Index r = 0; r < n; ++r)
      for (const auto& c : ring.product(q, r)) out[c.irrep].column.push_back(c.mult);
  for (auto& f : out) std::sort(f.column.begin(), f.column.end());
  return out;
}

class IsomorphismSearch {
 public:
  IsomorphismSearch(const FusionRing& source, const FusionRing& target, bool stop_at_first)
      : source_(source), target_(target), stop_at_first_(stop_at_first) {}

  std::vector<std::vector<Index>> run() {
    const int n = source_.rank();
    if (target_.rank() != n) return {};
    const auto fs = fingerprints(source_);
    const auto ft = fingerprints(target_);
    candidates_.assign(n, {});
    for (Index p = 0; p < n; ++p)
      for (Index x = 0; x < n; ++x)
        if (fs[p] == ft[x]) candidates_[p].push_back(x);
    // most constrained first
    order_.resize(n);
    for (Index p = 0; p < n; ++p) order_[p] = p;
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Index a, Index b) { return candidates_[a].size() < candidates_[b].size(); });
    perm_.assign(n, -1);
    used_.assign(n, false);
    assigned_.clear();
    descend(0);
    return std::move(found_);
  }

 private:
  bool consistent(Index p) const {
    const Index x = perm_[p];
    if (perm_[source_.dual(p)] >= 0 && perm_[source_.dual(p)] != target_.dual(x)) return false;
    for (Index q : assigned_) {
      for (const Index a : {p, q}) {
        for (const Index b : {p, q}) {
          for (Index r : assigned_) {
            if (source_.multiplicity(a, b, r) != target_.multiplicity(perm_[a], perm_[b], perm_[r])) return false;
          }
        }
      }
    }
    return true;
  }

  void descend(std::size_t depth) {
    if (stop_at_first_ && !found_.empty()) return;
    if (depth == order_.size()) {
      if (is_order_isomorphism(source_, target_, perm_)) found_.push_back(perm_);
      return;
    }
    const Index p = order_[depth];
    for (Index x : candidates_[p]) {
      if (used_[x]) continue;
      perm_[p] = x;
      used_[x] = true;
      assigned_.push_back(p);
      if (consistent(p)) descend(depth + 1);
      assigned_.pop_back();
      used_[x] = false;
      perm_[p] = -1;
    }
  }

  const FusionRing& source_;
  const FusionRing& target_;
  bool stop_at_first_;
  std::vector<std::vector<Index>> candidates_;
  std::vector<Index> order_;
  std::vector<Index> perm_;
  std::vector<bool> used_;
  std::vector<Index> assigned_;
  std::vector<std::vector<Index>> found_;
};

}  // namespace

std::vector<OrderIsomorphism> order_automorphisms(const FusionRing& ring, const SearchLimits& limits) {
  require_rank(ring, limits, "automorphism search");
  auto perms = IsomorphismSearch(ring, ring, false).run();
  std::sort(perms.begin(), perms.end());
  std::vector<OrderIsomorphism> out;
  for (auto& p : perms) out.push_back({&ring, &ring, std::move(p)});
  return out;
}

std::optional<OrderIsomorphism> find_order_isomorphism(const FusionRing& a, const FusionRing& b,
                                                       const SearchLimits& limits) {
  require_rank(a, limits, "isomorphism search");
  require_rank(b, limits, "isomorphism search");
  auto perms = IsomorphismSearch(a, b, true).run();
  if (perms.empty()) return std::nullopt;
  return OrderIsomorphism{&a, &b, std::move(perms.front())};
}

bool characteristic_check(const FusionRing& ring, const RepresentationSubring& sub, const SearchLimits& limits) {
  for (const auto& aut : order_automorphisms(ring, limits)) {
    std::vector<Index> image;
    for (Index p : sub.basis) image.push_back(aut.perm[p]);
    std::sort(image.begin(), image.end());
    if (image != sub.basis) return false;
  }
  return true;
}

}  // namespace fusionscope
