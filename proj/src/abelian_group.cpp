#include "fusionscope/abelian_group.hpp"

#include <algorithm>
#include <map>

#include "fusionscope/errors.hpp"

namespace fusionscope {

namespace {

int power(const GroupTable& table, int identity, int x, long long k) {
  int acc = identity;
  for (long long i = 0; i < k; ++i) acc = table[acc][x];
  return acc;
}

std::map<int, int> prime_factorization(int n) {
  std::map<int, int> out;
  for (int p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  if (n > 1) ++out[n];
  return out;
}

}  // namespace

int AbelianGroupStructure::inverse(int x) const {
  for (int y = 0; y < order(); ++y)
    if (table[x][y] == identity) return y;
  throw NotAGroup("element without inverse");
}

int AbelianGroupStructure::element_order(int x) const {
  int k = 1;
  for (int y = x; y != identity; y = table[y][x]) ++k;
  return k;
}

void check_abelian_group_axioms(const GroupTable& table, int identity) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw NotAGroup("empty table");
  if (identity < 0 || identity >= n) throw NotAGroup("identity out of range");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw NotAGroup("table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw NotAGroup("table entry out of range");
  }
  for (int x = 0; x < n; ++x) {
    if (table[identity][x] != x || table[x][identity] != x)
      throw NotAGroup("identity fails on element " + std::to_string(x));
    bool has_inverse = false;
    for (int y = 0; y < n; ++y) {
      if (table[x][y] != table[y][x])
        throw NotAGroup("not commutative at (" + std::to_string(x) + ", " + std::to_string(y) + ")");
      has_inverse = has_inverse || table[x][y] == identity;
    }
    if (!has_inverse) throw NotAGroup("element " + std::to_string(x) + " has no inverse");
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (table[table[x][y]][z] != table[x][table[y][z]])
          throw NotAGroup("not associative at (" + std::to_string(x) + ", " + std::to_string(y) + ", " +
                          std::to_string(z) + ")");
}

std::vector<int> identify_invariant_factors(const GroupTable& table, int identity) {
  check_abelian_group_axioms(table, identity);
  const int n = static_cast<int>(table.size());

  // p-primary exponents, largest first, for each prime dividing the order.
  std::vector<std::vector<int>> per_prime;
  std::vector<int> primes;
  for (const auto& [p, total] : prime_factorization(n)) {
    std::vector<int> log_counts{0};  // s_k, s_0 = 0
    long long pk = 1;
    for (int k = 1; log_counts.back() < total; ++k) {
      pk *= p;
      int count = 0;
      for (int x = 0; x < n; ++x)
        if (power(table, identity, x, pk) == identity) ++count;
      int s = 0;
      for (int c = count; c > 1; c /= p) {
        if (c % p) throw NotAGroup("element-order census is inconsistent with an abelian group");
        ++s;
      }
      log_counts.push_back(s);
    }
    // s_k - s_{k-1} = number of cyclic p-factors with exponent >= k
    std::vector<int> exps;
    const int kmax = static_cast<int>(log_counts.size()) - 1;
    for (int k = kmax; k >= 1; --k) {
      const int at_least_k = log_counts[k] - log_counts[k - 1];
      const int at_least_next = (k < kmax) ? log_counts[k + 1] - log_counts[k] : 0;
      for (int i = 0; i < at_least_k - at_least_next; ++i) exps.push_back(k);
    }
    primes.push_back(p);
    per_prime.push_back(exps);
  }

  std::size_t count = 0;
  for (const auto& e : per_prime) count = std::max(count, e.size());
  std::vector<int> factors(count, 1);
  for (std::size_t i = 0; i < primes.size(); ++i)
    for (std::size_t j = 0; j < per_prime[i].size(); ++j)
      for (int e = 0; e < per_prime[i][j]; ++e) factors[j] *= primes[i];
  std::reverse(factors.begin(), factors.end());

  long long product = 1;
  for (int d : factors) product *= d;
  if (product != n) throw NotAGroup("invariant factors do not multiply to the group order");
  return factors;
}

AbelianGroupStructure make_abelian_group(std::vector<std::string> elements, GroupTable table, int identity) {
  if (elements.size() != table.size()) throw NotAGroup("element list and table sizes differ");
  auto factors = identify_invariant_factors(table, identity);
  return AbelianGroupStructure{std::move(elements), std::move(table), identity, std::move(factors)};
}

std::string describe_factors(const std::vector<int>& factors) {
  if (factors.empty()) return "trivial";
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += " x ";
    out += "Z" + std::to_string(factors[i]);
  }
  return out;
}

}  // namespace fusionscope
