#include "fusionscope/fusion_ring.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "fusionscope/errors.hpp"

namespace fusionscope {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("integer overflow in ring arithmetic");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("integer overflow in ring arithmetic");
  return out;
}

std::string_view to_string(FsIndicator fs) {
  switch (fs) {
    case FsIndicator::real:
      return "real";
    case FsIndicator::complex:
      return "complex";
    case FsIndicator::pseudoreal:
      return "pseudoreal";
  }
  return "?";
}

std::optional<FsIndicator> parse_fs_indicator(std::string_view text) {
  if (text == "real") return FsIndicator::real;
  if (text == "complex") return FsIndicator::complex;
  if (text == "pseudoreal") return FsIndicator::pseudoreal;
  return std::nullopt;
}

std::string_view to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::dual_involution:
      return "dual-involution";
    case Axiom::unit_law:
      return "unit-law";
    case Axiom::commutativity:
      return "commutativity";
    case Axiom::associativity:
      return "associativity";
    case Axiom::duality:
      return "duality";
  }
  return "?";
}

// ------------------------------------------------------------ FusionRing

FusionRing::FusionRing(std::string name, std::vector<std::string> labels, Index unit,
                       std::vector<Index> dual, std::vector<FusionEntry> entries,
                       RingMetadata metadata)
    : name_(std::move(name)),
      labels_(std::move(labels)),
      unit_(unit),
      dual_(std::move(dual)),
      metadata_(std::move(metadata)) {
  const int n = rank();
  if (n < 1) throw MalformedInput("ring must have rank >= 1");
  std::set<std::string_view> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw MalformedInput("empty label");
    if (!seen.insert(l).second) throw MalformedInput("repeated label '" + l + "'");
  }
  auto in_range = [n](Index i) { return i >= 0 && i < n; };
  if (!in_range(unit_)) throw MalformedInput("unit index " + std::to_string(unit_) + " out of range");
  if (static_cast<int>(dual_.size()) != n)
    throw MalformedInput("dual has " + std::to_string(dual_.size()) + " entries, rank is " + std::to_string(n));
  for (Index d : dual_)
    if (!in_range(d)) throw MalformedInput("dual index " + std::to_string(d) + " out of range");
  if (metadata_.complete_below && *metadata_.complete_below < 0)
    throw MalformedInput("complete_below must be nonnegative");
  for (const auto& [label, fs] : metadata_.fs_indicators)
    if (!seen.contains(label)) throw MalformedInput("fs_indicators names unknown label '" + label + "'");

  std::vector<FusionEntry> canon;
  canon.reserve(entries.size());
  for (auto e : entries) {
    if (!in_range(e.p) || !in_range(e.q) || !in_range(e.r)) {
      std::ostringstream os;
      os << "fusion entry (" << e.p << ", " << e.q << ", " << e.r << ") has an index out of range";
      throw MalformedInput(os.str());
    }
    if (e.m < 0) {
      std::ostringstream os;
      os << "fusion entry (" << e.p << ", " << e.q << ", " << e.r << ") has negative multiplicity " << e.m;
      throw MalformedInput(os.str());
    }
    if (e.m == 0) continue;
    if (e.p > e.q) std::swap(e.p, e.q);
    canon.push_back(e);
  }
  std::sort(canon.begin(), canon.end());
  for (std::size_t i = 1; i < canon.size(); ++i) {
    const auto& a = canon[i - 1];
    const auto& b = canon[i];
    if (a.p == b.p && a.q == b.q && a.r == b.r) {
      std::ostringstream os;
      os << "duplicate fusion entry for (" << a.p << ", " << a.q << ", " << a.r << ")";
      throw MalformedInput(os.str());
    }
  }
  entries_ = std::move(canon);

  products_.assign(static_cast<std::size_t>(n) * n, {});
  for (const auto& e : entries_) {
    products_[pair_slot(e.p, e.q)].push_back({e.r, e.m});
    if (e.p != e.q) products_[pair_slot(e.q, e.p)].push_back({e.r, e.m});
  }
}

std::optional<Index> FusionRing::find_label(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Index>(it - labels_.begin());
}

Multiplicity FusionRing::multiplicity(Index p, Index q, Index r) const {
  for (const auto& c : product(p, q))
    if (c.irrep == r) return c.mult;
  return 0;
}

std::span<const Constituent> FusionRing::product(Index p, Index q) const {
  if (p < 0 || q < 0 || p >= rank() || q >= rank()) throw UsageError("basis index out of range");
  return products_[pair_slot(p, q)];
}

bool FusionRing::pair_complete(Index p, Index q) const {
  if (!metadata_.complete_below) return true;
  return p + q <= *metadata_.complete_below;
}

FusionRing FusionRing::with_multiplicity(Index p, Index q, Index r, Multiplicity m) const {
  if (p > q) std::swap(p, q);
  std::vector<FusionEntry> entries;
  entries.reserve(entries_.size() + 1);
  for (const auto& e : entries_)
    if (!(e.p == p && e.q == q && e.r == r)) entries.push_back(e);
  if (m != 0) entries.push_back({p, q, r, m});
  return FusionRing(name_, labels_, unit_, dual_, std::move(entries), metadata_);
}

FusionRing FusionRing::with_metadata(RingMetadata metadata) const {
  return FusionRing(name_, labels_, unit_, dual_, entries_, std::move(metadata));
}

FusionRing FusionRing::with_name(std::string name) const {
  return FusionRing(std::move(name), labels_, unit_, dual_, entries_, metadata_);
}

bool FusionRing::operator==(const FusionRing& other) const {
  return name_ == other.name_ && labels_ == other.labels_ && unit_ == other.unit_ &&
         dual_ == other.dual_ && entries_ == other.entries_ && metadata_ == other.metadata_;
}

// ------------------------------------------------------------ validation

namespace {

class ReportBuilder {
 public:
  void add(Axiom axiom, std::array<Index, 4> witness, const std::string& detail) {
    for (auto& v : report_.violations) {
      if (v.axiom == axiom) {
        ++v.count;
        return;
      }
    }
    report_.violations.push_back({axiom, witness, detail, 1});
  }

  ValidationReport take() { return std::move(report_); }

 private:
  ValidationReport report_;
};

std::string describe(const FusionRing& ring, std::initializer_list<Index> idx) {
  std::ostringstream os;
  bool first = true;
  for (Index i : idx) {
    os << (first ? "" : ", ") << ring.label(i);
    first = false;
  }
  return os.str();
}

}  // namespace

ValidationReport validate(const FusionRing& ring) {
  const int n = ring.rank();
  const Index u = ring.unit();
  ReportBuilder out;

  for (Index p = 0; p < n; ++p) {
    if (ring.dual(ring.dual(p)) != p) {
      out.add(Axiom::dual_involution, {p, -1, -1, -1},
              "dual(dual(" + ring.label(p) + ")) = " + ring.label(ring.dual(ring.dual(p))));
    }
  }
  if (ring.dual(u) != u)
    out.add(Axiom::dual_involution, {u, -1, -1, -1}, "dual of the unit is " + ring.label(ring.dual(u)));

  for (Index q = 0; q < n; ++q) {
    if (!ring.pair_complete(u, q)) continue;
    for (Index r = 0; r < n; ++r) {
      const Multiplicity expected = (r == q) ? 1 : 0;
      const Multiplicity got = ring.multiplicity(u, q, r);
      if (got != expected) {
        out.add(Axiom::unit_law, {q, r, -1, -1},
                "N^" + ring.label(r) + "_{unit," + ring.label(q) + "} = " + std::to_string(got) +
                    ", expected " + std::to_string(expected));
      }
    }
  }

  for (Index p = 0; p < n; ++p) {
    for (Index q = p + 1; q < n; ++q) {
      auto a = ring.product(p, q);
      auto b = ring.product(q, p);
      if (!std::equal(a.begin(), a.end(), b.begin(), b.end())) {
        Index r = -1;
        for (Index t = 0; t < n && r < 0; ++t)
          if (ring.multiplicity(p, q, t) != ring.multiplicity(q, p, t)) r = t;
        out.add(Axiom::commutativity, {p, q, r, -1}, "products differ at " + describe(ring, {p, q, r}));
      }
    }
  }

  for (Index p = 0; p < n; ++p) {
    for (Index q = 0; q < n; ++q) {
      if (!ring.pair_complete(p, q)) continue;
      const Multiplicity got = ring.multiplicity(p, q, u);
      const Multiplicity expected = (q == ring.dual(p)) ? 1 : 0;
      if (got != expected) {
        out.add(Axiom::duality, {p, q, -1, -1},
                "N^unit_{" + describe(ring, {p, q}) + "} = " + std::to_string(got) + ", expected " +
                    std::to_string(expected));
      }
    }
  }

  // (chi_p chi_q) chi_r against chi_p (chi_q chi_r), coefficient by coefficient.
  std::vector<Multiplicity> lhs(n), rhs(n);
  for (Index p = 0; p < n; ++p) {
    for (Index q = 0; q < n; ++q) {
      if (!ring.pair_complete(p, q)) continue;
      for (Index r = 0; r < n; ++r) {
        if (!ring.pair_complete(q, r)) continue;
        bool complete = true;
        for (const auto& s : ring.product(p, q)) complete = complete && ring.pair_complete(s.irrep, r);
        for (const auto& s : ring.product(q, r)) complete = complete && ring.pair_complete(p, s.irrep);
        if (!complete) continue;
        std::fill(lhs.begin(), lhs.end(), 0);
        std::fill(rhs.begin(), rhs.end(), 0);
        for (const auto& s : ring.product(p, q))
          for (const auto& t : ring.product(s.irrep, r))
            lhs[t.irrep] = checked_add(lhs[t.irrep], checked_mul(s.mult, t.mult));
        for (const auto& s : ring.product(q, r))
          for (const auto& t : ring.product(p, s.irrep))
            rhs[t.irrep] = checked_add(rhs[t.irrep], checked_mul(s.mult, t.mult));
        for (Index t = 0; t < n; ++t) {
          if (lhs[t] != rhs[t]) {
            out.add(Axiom::associativity, {p, q, r, t},
                    "coefficient of " + ring.label(t) + " in (" + ring.label(p) + "*" + ring.label(q) + ")*" +
                        ring.label(r) + " is " + std::to_string(lhs[t]) + ", in " + ring.label(p) + "*(" +
                        ring.label(q) + "*" + ring.label(r) + ") is " + std::to_string(rhs[t]));
          }
        }
      }
    }
  }
  return out.take();
}

// -------------------------------------------------- GeneralizedCharacter

GeneralizedCharacter::GeneralizedCharacter(const FusionRing& ring, std::vector<Multiplicity> coeffs)
    : ring_(&ring), coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) != ring.rank())
    throw UsageError("generalized character needs " + std::to_string(ring.rank()) + " coefficients, got " +
                     std::to_string(coeffs_.size()));
}

GeneralizedCharacter GeneralizedCharacter::zero(const FusionRing& ring) {
  return GeneralizedCharacter(ring, std::vector<Multiplicity>(ring.rank(), 0));
}

GeneralizedCharacter GeneralizedCharacter::basis(const FusionRing& ring, Index p) {
  if (p < 0 || p >= ring.rank()) throw UsageError("basis index out of range");
  std::vector<Multiplicity> c(ring.rank(), 0);
  c[p] = 1;
  return GeneralizedCharacter(ring, std::move(c));
}

bool GeneralizedCharacter::is_character() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Multiplicity m) { return m >= 0; });
}

bool GeneralizedCharacter::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Multiplicity m) { return m == 0; });
}

namespace {

void require_same_ring(const GeneralizedCharacter& a, const GeneralizedCharacter& b) {
  if (&a.ring() != &b.ring() && !(a.ring() == b.ring()))
    throw UsageError("generalized characters belong to different rings");
}

}  // namespace

GeneralizedCharacter operator+(const GeneralizedCharacter& a, const GeneralizedCharacter& b) {
  require_same_ring(a, b);
  std::vector<Multiplicity> c(a.coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked_add(a.coeffs_[i], b.coeffs_[i]);
  return GeneralizedCharacter(a.ring(), std::move(c));
}

GeneralizedCharacter operator-(const GeneralizedCharacter& a, const GeneralizedCharacter& b) {
  require_same_ring(a, b);
  std::vector<Multiplicity> c(a.coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked_add(a.coeffs_[i], checked_mul(-1, b.coeffs_[i]));
  return GeneralizedCharacter(a.ring(), std::move(c));
}

GeneralizedCharacter operator*(Multiplicity k, const GeneralizedCharacter& a) {
  std::vector<Multiplicity> c(a.coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked_mul(k, a.coeffs_[i]);
  return GeneralizedCharacter(a.ring(), std::move(c));
}

bool GeneralizedCharacter::operator==(const GeneralizedCharacter& other) const {
  return (ring_ == other.ring_ || *ring_ == *other.ring_) && coeffs_ == other.coeffs_;
}

GeneralizedCharacter multiply(const GeneralizedCharacter& a, const GeneralizedCharacter& b) {
  require_same_ring(a, b);
  const FusionRing& ring = a.ring();
  const int n = ring.rank();
  std::vector<Multiplicity> out(n, 0);
  for (Index p = 0; p < n; ++p) {
    if (a[p] == 0) continue;
    for (Index q = 0; q < n; ++q) {
      if (b[q] == 0) continue;
      const Multiplicity w = checked_mul(a[p], b[q]);
      for (const auto& c : ring.product(p, q)) out[c.irrep] = checked_add(out[c.irrep], checked_mul(w, c.mult));
    }
  }
  return GeneralizedCharacter(ring, std::move(out));
}

bool product_is_complete(const GeneralizedCharacter& a, const GeneralizedCharacter& b) {
  require_same_ring(a, b);
  const FusionRing& ring = a.ring();
  for (Index p = 0; p < ring.rank(); ++p)
    for (Index q = 0; q < ring.rank(); ++q)
      if (a[p] != 0 && b[q] != 0 && !ring.pair_complete(p, q)) return false;
  return true;
}

bool leq(const GeneralizedCharacter& a, const GeneralizedCharacter& b) {
  require_same_ring(a, b);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    if (b.coeffs()[i] < a.coeffs()[i]) return false;
  return true;
}

std::vector<Constituent> decompose(const GeneralizedCharacter& a) {
  std::vector<Constituent> out;
  for (Index p = 0; p < a.ring().rank(); ++p) {
    if (a[p] < 0)
      throw NotACharacter("coefficient of " + a.ring().label(p) + " is " + std::to_string(a[p]) +
                          "; not a character");
    if (a[p] > 0) out.push_back({p, a[p]});
  }
  return out;
}

GeneralizedCharacter dual_char(const GeneralizedCharacter& a) {
  const FusionRing& ring = a.ring();
  std::vector<Multiplicity> c(ring.rank(), 0);
  for (Index p = 0; p < ring.rank(); ++p) c[ring.dual(p)] = a[p];
  return GeneralizedCharacter(ring, std::move(c));
}

}  // namespace fusionscope
