#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace oracle {

std::string data_path(std::string_view relative) { return std::string(FUSIONSCOPE_DATA_DIR) + "/" + std::string(relative); }

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json load_json(const std::string& path) { return nlohmann::json::parse(read_text(path)); }

const std::vector<std::string>& group_names() {
  static const std::vector<std::string> names{"trivial", "Z2", "Z3", "Z4", "Z5", "Z6",
                                              "Z2xZ2",   "S3", "D4", "Q8", "A4"};
  return names;
}

void Dense::set(int p, int q, int r, std::int64_t m) {
  n[(static_cast<std::size_t>(p) * rank + q) * rank + r] = m;
  n[(static_cast<std::size_t>(q) * rank + p) * rank + r] = m;
}

Dense dense_from_json(const nlohmann::json& doc) {
  Dense d;
  d.rank = doc.at("rank").get<int>();
  d.unit = doc.at("unit").get<int>();
  d.dual = doc.at("dual").get<std::vector<int>>();
  if (doc.contains("metadata") && doc["metadata"].contains("complete_below"))
    d.complete_below = doc["metadata"]["complete_below"].get<int>();
  d.n.assign(static_cast<std::size_t>(d.rank) * d.rank * d.rank, 0);
  for (const auto& quad : doc.at("fusion")) d.set(quad[0], quad[1], quad[2], quad[3].get<std::int64_t>());
  return d;
}

Dense load_group_dense(std::string_view name) {
  return dense_from_json(load_json(data_path("catalog/" + std::string(name) + ".json")));
}

Dense su2_dense(int max_twice_j) {
  Dense d;
  d.rank = max_twice_j + 1;
  d.dual.resize(d.rank);
  std::iota(d.dual.begin(), d.dual.end(), 0);
  d.complete_below = max_twice_j;
  d.n.assign(static_cast<std::size_t>(d.rank) * d.rank * d.rank, 0);
  for (int a = 0; a < d.rank; ++a)
    for (int b = 0; b < d.rank; ++b)
      for (int c = std::abs(a - b); c <= std::min(a + b, max_twice_j); c += 2) d.set(a, b, c, 1);
  return d;
}

Dense cyclic_dense(int n) {
  Dense d;
  d.rank = n;
  for (int k = 0; k < n; ++k) d.dual.push_back((n - k) % n);
  d.n.assign(static_cast<std::size_t>(n) * n * n, 0);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) d.set(p, q, (p + q) % n, 1);
  return d;
}

fusionscope::FusionRing to_library(const Dense& d, std::string name) {
  std::vector<std::string> labels;
  for (int p = 0; p < d.rank; ++p) labels.push_back(std::to_string(p));
  std::vector<fusionscope::FusionEntry> entries;
  for (int p = 0; p < d.rank; ++p)
    for (int q = p; q < d.rank; ++q)
      for (int r = 0; r < d.rank; ++r)
        if (d.at(p, q, r) != 0) entries.push_back({p, q, r, d.at(p, q, r)});
  fusionscope::RingMetadata meta;
  meta.complete_below = d.complete_below;
  return fusionscope::FusionRing(std::move(name), std::move(labels), d.unit, d.dual, std::move(entries), meta);
}

std::vector<std::string> labels_of(const nlohmann::json& doc) { return doc.at("labels").get<std::vector<std::string>>(); }

bool dual_involution_ok(const Dense& d) {
  if (d.dual[d.unit] != d.unit) return false;
  for (int p = 0; p < d.rank; ++p)
    if (d.dual[d.dual[p]] != p) return false;
  return true;
}

bool unit_law_ok(const Dense& d) {
  for (int q = 0; q < d.rank; ++q)
    for (int r = 0; r < d.rank; ++r)
      if (d.complete(d.unit, q) && d.at(d.unit, q, r) != (q == r ? 1 : 0)) return false;
  return true;
}

bool duality_ok(const Dense& d) {
  for (int p = 0; p < d.rank; ++p)
    for (int q = 0; q < d.rank; ++q)
      if (d.complete(p, q) && d.at(p, q, d.unit) != (q == d.dual[p] ? 1 : 0)) return false;
  return true;
}

namespace {

/// Coefficient vectors of (pq)r and p(qr), or nullopt if some product
/// involved is clipped.
std::optional<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>> both_sides(const Dense& d, int p,
                                                                                          int q, int r) {
  if (!d.complete(p, q) || !d.complete(q, r)) return std::nullopt;
  std::vector<std::int64_t> lhs(d.rank, 0), rhs(d.rank, 0);
  for (int s = 0; s < d.rank; ++s) {
    if (d.at(p, q, s) && !d.complete(s, r)) return std::nullopt;
    if (d.at(q, r, s) && !d.complete(p, s)) return std::nullopt;
  }
  for (int s = 0; s < d.rank; ++s)
    for (int t = 0; t < d.rank; ++t) {
      lhs[t] += d.at(p, q, s) * d.at(s, r, t);
      rhs[t] += d.at(q, r, s) * d.at(p, s, t);
    }
  return std::make_pair(lhs, rhs);
}

}  // namespace

bool associativity_ok(const Dense& d) {
  for (int p = 0; p < d.rank; ++p)
    for (int q = 0; q < d.rank; ++q)
      for (int r = 0; r < d.rank; ++r) {
        auto sides = both_sides(d, p, q, r);
        if (sides && sides->first != sides->second) return false;
      }
  return true;
}

bool all_axioms_ok(const Dense& d) {
  return dual_involution_ok(d) && unit_law_ok(d) && duality_ok(d) && associativity_ok(d);
}

bool witness_fails(const Dense& d, fusionscope::Axiom axiom, const std::array<int, 4>& w) {
  using fusionscope::Axiom;
  switch (axiom) {
    case Axiom::dual_involution:
      return d.dual[d.dual[w[0]]] != w[0] || (w[0] == d.unit && d.dual[w[0]] != w[0]);
    case Axiom::unit_law:
      return d.at(d.unit, w[0], w[1]) != (w[0] == w[1] ? 1 : 0);
    case Axiom::commutativity:
      return d.at(w[0], w[1], w[2]) != d.at(w[1], w[0], w[2]);
    case Axiom::duality:
      return d.at(w[0], w[1], d.unit) != (w[1] == d.dual[w[0]] ? 1 : 0);
    case Axiom::associativity: {
      auto sides = both_sides(d, w[0], w[1], w[2]);
      return sides && sides->first[w[3]] != sides->second[w[3]];
    }
  }
  return false;
}

std::vector<std::int64_t> multiply(const Dense& d, const std::vector<std::int64_t>& a,
                                   const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> out(d.rank, 0);
  for (int p = 0; p < d.rank; ++p)
    for (int q = 0; q < d.rank; ++q)
      for (int r = 0; r < d.rank; ++r) out[r] += a[p] * b[q] * d.at(p, q, r);
  return out;
}

std::vector<std::int64_t> dual_of(const Dense& d, const std::vector<std::int64_t>& a) {
  std::vector<std::int64_t> out(d.rank, 0);
  for (int p = 0; p < d.rank; ++p) out[d.dual[p]] = a[p];
  return out;
}

bool is_isomorphism(const Dense& a, const Dense& b, const std::vector<int>& perm) {
  if (a.rank != b.rank || perm[a.unit] != b.unit) return false;
  for (int p = 0; p < a.rank; ++p)
    if (perm[a.dual[p]] != b.dual[perm[p]]) return false;
  for (int p = 0; p < a.rank; ++p)
    for (int q = 0; q < a.rank; ++q)
      for (int r = 0; r < a.rank; ++r)
        if (a.at(p, q, r) != b.at(perm[p], perm[q], perm[r])) return false;
  return true;
}

std::vector<std::vector<int>> all_isomorphisms(const Dense& a, const Dense& b) {
  std::vector<std::vector<int>> out;
  if (a.rank != b.rank) return out;
  std::vector<int> perm(a.rank);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (is_isomorphism(a, b, perm)) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<int> closure(const Dense& d, const std::vector<int>& seed) {
  std::vector<bool> in(d.rank, false);
  in[d.unit] = true;
  for (int p : seed) in[p] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int p = 0; p < d.rank; ++p) {
      if (!in[p]) continue;
      if (!in[d.dual[p]]) in[d.dual[p]] = changed = true;
      for (int q = 0; q < d.rank; ++q) {
        if (!in[q]) continue;
        for (int r = 0; r < d.rank; ++r)
          if (d.at(p, q, r) && !in[r]) in[r] = changed = true;
      }
    }
  }
  std::vector<int> out;
  for (int p = 0; p < d.rank; ++p)
    if (in[p]) out.push_back(p);
  return out;
}

std::vector<std::vector<int>> all_subrings(const Dense& d) {
  std::vector<std::vector<int>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d.rank); ++mask) {
    if (!(mask >> d.unit & 1)) continue;
    std::vector<int> members;
    for (int p = 0; p < d.rank; ++p)
      if (mask >> p & 1) members.push_back(p);
    if (closure(d, members) == members) out.push_back(members);
  }
  std::sort(out.begin(), out.end());
  return out;
}

double character_residual(const Dense& d, const std::vector<std::complex<double>>& alpha) {
  double worst = 0.0;
  for (int p = 0; p < d.rank; ++p)
    for (int q = 0; q < d.rank; ++q) {
      if (!d.complete(p, q)) continue;
      std::complex<double> rhs = 0.0;
      for (int r = 0; r < d.rank; ++r) rhs += static_cast<double>(d.at(p, q, r)) * alpha[r];
      worst = std::max(worst, std::abs(alpha[p] * alpha[q] - rhs));
    }
  return worst;
}

std::vector<std::vector<std::int64_t>> brute_integer_solutions(const Dense& d, std::int64_t bound) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> v(d.rank, 1);
  while (true) {
    bool ok = true;
    for (int p = 0; p < d.rank && ok; ++p)
      for (int q = 0; q < d.rank && ok; ++q) {
        if (!d.complete(p, q)) continue;
        std::int64_t rhs = 0;
        for (int r = 0; r < d.rank; ++r) rhs += d.at(p, q, r) * v[r];
        ok = v[p] * v[q] == rhs;
      }
    if (ok) out.push_back(v);
    int k = 0;
    while (k < d.rank && (k == d.unit || v[k] == bound)) {
      if (k != d.unit) v[k] = 1;
      ++k;
    }
    if (k == d.rank) break;
    ++v[k];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::int64_t>> fusion_matrix(const Dense& d, int p) {
  std::vector<std::vector<std::int64_t>> m(d.rank, std::vector<std::int64_t>(d.rank, 0));
  for (int r = 0; r < d.rank; ++r)
    for (int q = 0; q < d.rank; ++q) m[r][q] = d.at(p, q, r);
  return m;
}

std::vector<BigInt> characteristic_polynomial(const std::vector<std::vector<std::int64_t>>& a) {
  const std::size_t n = a.size();
  using Mat = std::vector<std::vector<BigInt>>;
  Mat m(n, std::vector<BigInt>(n, 0));
  std::vector<BigInt> c(n + 1, 0);
  c[n] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    Mat next(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l) next[i][j] += BigInt(a[i][l]) * m[l][j];
      next[i][i] += c[n - k + 1];
    }
    m = std::move(next);
    BigInt trace = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) trace += BigInt(a[i][l]) * m[l][i];
    c[n - k] = -trace / static_cast<long>(k);
  }
  return c;
}

double largest_real_root(const std::vector<BigInt>& coeffs) {
  auto eval = [&](double x) {
    double y = 0.0;
    for (std::size_t i = coeffs.size(); i-- > 0;) y = y * x + coeffs[i].convert_to<double>();
    return y;
  };
  double bound = 1.0;
  for (const auto& c : coeffs) bound = std::max(bound, 1.0 + std::abs(c.convert_to<double>()));
  double hi = bound, lo = bound;
  const double step = 1e-3;
  while (lo > -bound && eval(lo) > 0) lo -= step;
  if (eval(lo) == 0.0) return lo;
  hi = lo + step;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (eval(mid) > 0 ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<std::vector<std::complex<double>>> oracle_columns(std::string_view group) {
  const auto facts = load_json(data_path("oracle/" + std::string(group) + ".json"));
  std::vector<std::vector<std::complex<double>>> out;
  for (const auto& column : facts.at("character_columns")) {
    std::vector<std::complex<double>> col;
    for (const auto& z : column) col.emplace_back(z[0].get<double>(), z[1].get<double>());
    out.push_back(col);
  }
  return out;
}

bool same_column_sets(std::vector<std::vector<std::complex<double>>> a,
                      std::vector<std::vector<std::complex<double>>> b, double tol) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& x : a) {
    bool matched = false;
    for (std::size_t j = 0; j < b.size() && !matched; ++j) {
      if (used[j] || b[j].size() != x.size()) continue;
      bool close = true;
      for (std::size_t k = 0; k < x.size() && close; ++k) close = std::abs(x[k] - b[j][k]) <= tol;
      if (close) used[j] = matched = true;
    }
    if (!matched) return false;
  }
  return true;
}

Table cyclic_product_table(const std::vector<int>& factors) {
  int order = 1;
  for (int f : factors) order *= f;
  auto digits = [&](int x) {
    std::vector<int> out;
    for (int f : factors) {
      out.push_back(x % f);
      x /= f;
    }
    return out;
  };
  Table t(order, std::vector<int>(order));
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y) {
      auto dx = digits(x), dy = digits(y);
      int z = 0, scale = 1;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        z += ((dx[i] + dy[i]) % factors[i]) * scale;
        scale *= factors[i];
      }
      t[x][y] = z;
    }
  return t;
}

Table relabel(const Table& t, const std::vector<int>& perm) {
  Table out(t.size(), std::vector<int>(t.size()));
  for (std::size_t x = 0; x < t.size(); ++x)
    for (std::size_t y = 0; y < t.size(); ++y) out[perm[x]][perm[y]] = perm[t[x][y]];
  return out;
}

bool tables_isomorphic(const Table& a, const Table& b) {
  if (a.size() != b.size()) return false;
  std::vector<int> perm(a.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t x = 0; x < a.size() && ok; ++x)
      for (std::size_t y = 0; y < a.size() && ok; ++y) ok = perm[a[x][y]] == b[perm[x]][perm[y]];
    if (ok) return true;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return false;
}

SpinSum times_half(const SpinSum& chi) {
  SpinSum out;
  for (const auto& [tj, m] : chi) {
    if (tj > 0) out[tj - 1] += m;
    out[tj + 1] += m;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

SpinSum half_power(int n) {
  SpinSum chi{{0, 1}};
  for (int i = 0; i < n; ++i) chi = times_half(chi);
  return chi;
}

SpinSum weight_product(int twice_j, int twice_j2) {
  // weights 2m run over -2j, -2j + 2, ..., 2j; keyed by 2m
  std::map<int, BigInt> weights;
  for (int a = -twice_j; a <= twice_j; a += 2)
    for (int b = -twice_j2; b <= twice_j2; b += 2) weights[a + b] += 1;
  SpinSum out;
  while (!weights.empty()) {
    auto top = std::prev(weights.end());
    const int highest = top->first;
    const BigInt m = top->second;
    if (m < 0 || highest < 0) throw std::logic_error("weight multiset is not a character");
    out[highest] += m;
    for (int w = -highest; w <= highest; w += 2) {
      weights[w] -= m;
      if (weights[w] == 0) weights.erase(w);
    }
  }
  return out;
}

}  // namespace oracle
