#include "fusionscope/su2.hpp"

#include <charconv>
#include <mutex>
#include <sstream>

#include "fusionscope/errors.hpp"

namespace fusionscope::su2 {

// ------------------------------------------------------------ SpinIndex

std::string SpinIndex::to_string() const {
  if (twice_j % 2 == 0) return std::to_string(twice_j / 2);
  return std::to_string(twice_j) + "/2";
}

SpinIndex SpinIndex::parse(std::string_view text) {
  auto fail = [&]() -> SpinIndex { throw MalformedInput("not a spin value: '" + std::string(text) + "'"); };
  auto parse_uint = [&](std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || v < 0 || s.empty()) fail();
    return v;
  };
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    if (text.substr(slash + 1) != "2") return fail();
    const int num = parse_uint(text.substr(0, slash));
    if (num % 2 == 0) return fail();
    return SpinIndex{num};
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    const int whole = parse_uint(text.substr(0, dot));
    const auto frac = text.substr(dot + 1);
    if (frac == "5") return SpinIndex{2 * whole + 1};
    if (frac == "0") return SpinIndex{2 * whole};
    return fail();
  }
  return SpinIndex{2 * parse_uint(text)};
}

// --------------------------------------------------------- SU2Character

SU2Character SU2Character::irrep(SpinIndex j) {
  SU2Character c;
  c.add(j, 1);
  return c;
}

BigInt SU2Character::coefficient(SpinIndex j) const {
  auto it = coeffs_.find(j);
  return it == coeffs_.end() ? BigInt(0) : it->second;
}

void SU2Character::add(SpinIndex j, const BigInt& m) {
  if (m == 0) return;
  auto [it, inserted] = coeffs_.emplace(j, m);
  if (!inserted) {
    it->second += m;
    if (it->second == 0) coeffs_.erase(it);
  }
}

BigInt SU2Character::dimension() const {
  BigInt d = 0;
  for (const auto& [j, m] : coeffs_) d += m * j.dimension();
  return d;
}

std::string SU2Character::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [j, m] : coeffs_) {
    const bool negative = m < 0;
    if (!first) os << (negative ? " - " : " + ");
    else if (negative) os << "-";
    const BigInt mag = negative ? BigInt(-m) : m;
    if (mag != 1) os << mag;
    os << "chi_" << j.to_string();
    first = false;
  }
  return os.str();
}

SU2Character operator+(const SU2Character& a, const SU2Character& b) {
  SU2Character out = a;
  for (const auto& [j, m] : b.coeffs_) out.add(j, m);
  return out;
}

SU2Character operator*(const BigInt& k, const SU2Character& a) {
  SU2Character out;
  for (const auto& [j, m] : a.coeffs_) out.add(j, k * m);
  return out;
}

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

// ---------------------------------------------------------- derivation

namespace {

using Row = std::map<int, int>;  // twice_j -> multiplicity

void enumerate_fillings(int min_twice_j, int remaining, Row& current, std::vector<Row>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (int tj = min_twice_j; tj + 1 <= remaining; ++tj) {
    const int dim = tj + 1;
    for (int count = 1; count * dim <= remaining; ++count) {
      current[tj] = count;
      enumerate_fillings(tj + 1, remaining - count * dim, current, out);
    }
    current.erase(tj);
  }
}

}  // namespace

std::vector<HalfTensorStep> derive_half_tensor(int max_twice_j) {
  if (max_twice_j < 0) throw UsageError("max_twice_j must be nonnegative");
  std::vector<Row> rows;
  std::vector<HalfTensorStep> steps;
  for (int tk = 0; tk <= max_twice_j; ++tk) {
    const int total = 2 * (tk + 1);
    Row fixed;
    // D_0 occurs in D_1/2 (x) D_k iff D_k is the dual of D_1/2, i.e. k = 1/2.
    const int unit_mult = (tk == 1) ? 1 : 0;
    fixed[0] = unit_mult;
    // j < k: mult of D_j = mult of D_0 in (D_j (x) D_1/2) (x) D_k = mult of D_k in the derived row of j.
    for (int tj = 0; tj < tk; ++tj) {
      auto it = rows[tj].find(tk);
      const int m = it == rows[tj].end() ? 0 : it->second;
      if (tj == 0 && m != unit_mult)
        throw DerivationFailure("constraints on D_0 disagree at 2k = " + std::to_string(tk));
      fixed[tj] = m;
    }
    int remaining = total;
    for (const auto& [tj, m] : fixed) remaining -= m * (tj + 1);

    std::vector<Row> candidates;
    if (remaining >= 0) {
      Row free;
      enumerate_fillings(std::max(tk, 1), remaining, free, candidates);
    }
    if (candidates.size() != 1) {
      throw DerivationFailure("D_1/2 (x) D_" + SpinIndex{tk}.to_string() + " admits " +
                              std::to_string(candidates.size()) + " decompositions");
    }
    Row row = candidates.front();
    for (const auto& [tj, m] : fixed)
      if (m) row[tj] += m;

    Row expected;
    if (tk > 0) expected[tk - 1] = 1;
    expected[tk + 1] = 1;
    if (row != expected)
      throw DerivationFailure("derived D_1/2 (x) D_" + SpinIndex{tk}.to_string() +
                              " differs from D_k-1/2 (+) D_k+1/2");

    HalfTensorStep step{SpinIndex{tk}, {}, candidates.size()};
    for (const auto& [tj, m] : row) step.decomposition[SpinIndex{tj}] = m;
    steps.push_back(std::move(step));
    rows.push_back(std::move(row));
  }
  return steps;
}

// -------------------------------------------------- half-power formulas

namespace {

SU2Character chi_half_power_uncached(int n) {
  SU2Character out = SU2Character::irrep(SpinIndex{n});
  for (int i = 1; i <= n / 2; ++i) out.add(SpinIndex{n - 2 * i}, binomial(n, i) - binomial(n, i - 1));
  return out;
}

}  // namespace

SU2Character chi_half_power(int n) {
  if (n < 0) throw UsageError("negative power");
  static std::mutex mu;
  static std::vector<SU2Character> cache;
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(cache.size()) <= n) cache.push_back(chi_half_power_uncached(static_cast<int>(cache.size())));
  return cache[n];
}

std::map<int, BigInt> chi_in_half_powers(SpinIndex j) {
  std::map<int, BigInt> out;
  for (int i = 0; i <= j.twice_j / 2; ++i) {
    BigInt c = binomial(j.twice_j - i, i);
    if (i % 2) c = -c;
    if (c != 0) out[j.twice_j - 2 * i] += c;
  }
  return out;
}

SU2Character substitute_half_powers(const std::map<int, BigInt>& expansion) {
  SU2Character out;
  for (const auto& [power, c] : expansion) out = out + c * chi_half_power(power);
  return out;
}

SU2Character cg_closed_form(SpinIndex j, SpinIndex j2) {
  SU2Character out;
  const int lo = std::abs(j.twice_j - j2.twice_j);
  for (int t = lo; t <= j.twice_j + j2.twice_j; t += 2) out.add(SpinIndex{t}, 1);
  return out;
}

SU2Character cg_product(SpinIndex j, SpinIndex j2) {
  const auto a = chi_in_half_powers(j);
  const auto b = chi_in_half_powers(j2);
  std::map<int, BigInt> product;
  for (const auto& [pa, ca] : a)
    for (const auto& [pb, cb] : b) product[pa + pb] += ca * cb;
  SU2Character derived = substitute_half_powers(product);
  const SU2Character closed = cg_closed_form(j, j2);
  if (derived != closed)
    throw InternalConsistency("chi_" + j.to_string() + " * chi_" + j2.to_string() + ": half-power route gives " +
                              derived.to_string() + ", closed form gives " + closed.to_string());
  return derived;
}

// ------------------------------------------------------- grading/export

int parity_class(SpinIndex j) { return j.twice_j % 2; }

AbelianGroupStructure parity_grading() {
  return make_abelian_group({"<0>", "<1/2>"}, {{0, 1}, {1, 0}}, 0);
}

std::string truncated_ring_name(int max_twice_j) {
  std::string j = std::to_string(max_twice_j / 2);
  if (max_twice_j % 2) j += ".5";
  return "SU2-trunc-jmax" + j;
}

FusionRing export_truncated_ring(int max_twice_j) {
  if (max_twice_j < 0) throw UsageError("max_twice_j must be nonnegative");
  std::vector<std::string> labels;
  std::vector<Index> dual;
  RingMetadata meta;
  meta.connected = true;
  meta.complete_below = max_twice_j;
  for (int t = 0; t <= max_twice_j; ++t) {
    labels.push_back(SpinIndex{t}.to_string());
    dual.push_back(t);
    meta.fs_indicators[labels.back()] = (t % 2) ? FsIndicator::pseudoreal : FsIndicator::real;
  }
  std::vector<FusionEntry> entries;
  for (int p = 0; p <= max_twice_j; ++p)
    for (int q = p; q <= max_twice_j; ++q) {
      const SU2Character product = cg_product(SpinIndex{p}, SpinIndex{q});
      for (const auto& [r, m] : product.coeffs())
        if (r.twice_j <= max_twice_j) entries.push_back({p, q, r.twice_j, static_cast<Multiplicity>(m)});
    }
  return FusionRing(truncated_ring_name(max_twice_j), std::move(labels), 0, std::move(dual), std::move(entries),
                    std::move(meta));
}

}  // namespace fusionscope::su2
