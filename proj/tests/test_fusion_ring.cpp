#include <doctest.h>

#include <random>

#include "fusionscope/errors.hpp"
#include "fusionscope/fusion_ring.hpp"
#include "fusionscope/su2.hpp"
#include "oracles.hpp"
#include "rings.hpp"

using namespace fusionscope;
using testing_support::catalog_ring;

namespace {

std::vector<Multiplicity> basis_vector(int rank, Index p) {
  std::vector<Multiplicity> v(rank, 0);
  v[p] = 1;
  return v;
}

std::vector<Multiplicity> random_coeffs(std::mt19937_64& rng, int rank, int support, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  std::vector<Multiplicity> v(rank, 0);
  for (int p = 0; p < support; ++p) v[p] = dist(rng);
  return v;
}

}  // namespace

TEST_CASE("every catalog ring validates, in agreement with the dense oracle") {
  for (const auto& name : oracle::group_names()) {
    CAPTURE(name);
    CHECK(validate(catalog_ring(name)).ok());
    CHECK(oracle::all_axioms_ok(oracle::load_group_dense(name)));
  }
  for (int twice : {2, 4, 10}) {
    CAPTURE(twice);
    CHECK(validate(su2::export_truncated_ring(twice)).ok());
    CHECK(oracle::all_axioms_ok(oracle::su2_dense(twice)));
  }
}

TEST_CASE("rank-one ring validates") {
  FusionRing trivial("trivial", {"1"}, 0, {0}, {{0, 0, 0, 1}});
  CHECK(validate(trivial).ok());
}

TEST_CASE("adding g to g*g in D4 yields a ring that still satisfies every axiom") {
  const auto d4 = catalog_ring("D4");
  const Index g = *d4.find_label("2");
  const auto mutated = d4.with_multiplicity(g, g, g, 1);
  auto dense = oracle::load_group_dense("D4");
  dense.set(g, g, g, 1);
  CHECK(oracle::all_axioms_ok(dense));
  CHECK(validate(mutated).ok());
}

TEST_CASE("doubling a one-dimensional constituent of g*g breaks associativity") {
  const auto d4 = catalog_ring("D4");
  const Index g = *d4.find_label("2");
  const Index a = *d4.find_label("1a");
  const auto report = validate(d4.with_multiplicity(g, g, a, 2));
  REQUIRE_FALSE(report.ok());
  auto dense = oracle::load_group_dense("D4");
  dense.set(g, g, a, 2);
  bool saw_associativity = false;
  for (const auto& v : report.violations) {
    CHECK(oracle::witness_fails(dense, v.axiom, v.witness));
    saw_associativity = saw_associativity || v.axiom == Axiom::associativity;
  }
  CHECK(saw_associativity);
}

TEST_CASE("single-entry edits: verdicts match the dense oracle and witnesses are genuine") {
  for (const auto& name : oracle::group_names()) {
    CAPTURE(name);
    const auto ring = catalog_ring(name);
    const auto base = oracle::load_group_dense(name);
    for (Index p = 0; p < ring.rank(); ++p)
      for (Index q = p; q < ring.rank(); ++q)
        for (Index r = 0; r < ring.rank(); ++r)
          for (int delta : {-1, 1}) {
            const Multiplicity m = base.at(p, q, r) + delta;
            if (m < 0) continue;
            CAPTURE(p);
            CAPTURE(q);
            CAPTURE(r);
            CAPTURE(m);
            auto dense = base;
            dense.set(p, q, r, m);
            const auto report = validate(ring.with_multiplicity(p, q, r, m));
            CHECK(report.ok() == oracle::all_axioms_ok(dense));
            for (const auto& v : report.violations) CHECK(oracle::witness_fails(dense, v.axiom, v.witness));
          }
  }
}

TEST_CASE("a non-involutive dual is reported") {
  FusionRing z3("Z3", {"1", "1a", "1b"}, 0, {1, 2, 0},
                {{0, 0, 0, 1}, {0, 1, 1, 1}, {0, 2, 2, 1}, {1, 1, 2, 1}, {1, 2, 0, 1}, {2, 2, 1, 1}});
  const auto report = validate(z3);
  REQUIRE_FALSE(report.ok());
  CHECK(report.violations.front().axiom == Axiom::dual_involution);
}

TEST_CASE("structural errors are malformed input, not axiom violations") {
  CHECK_THROWS_AS(FusionRing("x", {"1", "a"}, 0, {0, 1}, {{0, 2, 0, 1}}), MalformedInput);
  CHECK_THROWS_AS(FusionRing("x", {"1", "a"}, 0, {0, 1}, {{0, 1, 1, -1}}), MalformedInput);
  CHECK_THROWS_AS(FusionRing("x", {"1", "a"}, 0, {0, 1}, {{0, 1, 1, 1}, {1, 0, 1, 1}}), MalformedInput);
  CHECK_THROWS_AS(FusionRing("x", {"1", "1"}, 0, {0, 1}, {}), MalformedInput);
  CHECK_THROWS_AS(FusionRing("x", {"1", "a"}, 2, {0, 1}, {}), MalformedInput);
}

TEST_CASE("multiply: worked examples") {
  const auto su2 = su2::export_truncated_ring(10);
  const auto half = GeneralizedCharacter::basis(su2, 1);
  auto expected = GeneralizedCharacter::basis(su2, 0) + GeneralizedCharacter::basis(su2, 2);
  CHECK(multiply(half, half) == expected);

  const auto d4 = catalog_ring("D4");
  const Index g = *d4.find_label("2");
  const auto gg = multiply(GeneralizedCharacter::basis(d4, g), GeneralizedCharacter::basis(d4, g));
  CHECK(gg.coeffs() == std::vector<Multiplicity>{1, 1, 1, 1, 0});
}

TEST_CASE("unit acts as identity on random elements") {
  std::mt19937_64 rng(11);
  for (const auto& name : oracle::group_names()) {
    const auto ring = catalog_ring(name);
    const auto unit = GeneralizedCharacter::basis(ring, ring.unit());
    for (int i = 0; i < 20; ++i) {
      GeneralizedCharacter x(ring, random_coeffs(rng, ring.rank(), ring.rank(), -5, 5));
      CHECK(multiply(unit, x) == x);
    }
  }
}

TEST_CASE("leq, decompose and dual_char") {
  const auto su2 = su2::export_truncated_ring(10);
  const auto unit = GeneralizedCharacter::basis(su2, 0);
  const auto half = GeneralizedCharacter::basis(su2, 1);
  const auto one = GeneralizedCharacter::basis(su2, 2);
  CHECK(leq(unit, multiply(half, half)));
  CHECK(leq(one, one));
  CHECK_FALSE(leq(one, half));

  const auto cube = multiply(multiply(half, half), half);
  oracle::SpinSum expected = oracle::half_power(3);
  std::vector<Constituent> want;
  for (const auto& [tj, m] : expected) want.push_back({tj, static_cast<Multiplicity>(m)});
  CHECK(decompose(cube) == want);
  CHECK(decompose(cube) == std::vector<Constituent>{{1, 2}, {3, 1}});
  CHECK(decompose(unit) == std::vector<Constituent>{{0, 1}});
  CHECK_THROWS_AS(decompose(unit - half), NotACharacter);

  const auto d4 = catalog_ring("D4");
  const Index g = *d4.find_label("2");
  const auto gg = multiply(GeneralizedCharacter::basis(d4, g), GeneralizedCharacter::basis(d4, g));
  CHECK(decompose(gg) == std::vector<Constituent>{{0, 1}, {1, 1}, {2, 1}, {3, 1}});

  CHECK(dual_char(half) == half);
  const auto z3 = catalog_ring("Z3");
  CHECK(dual_char(GeneralizedCharacter::basis(z3, 1)) == GeneralizedCharacter::basis(z3, 2));
}

TEST_CASE("(chi chi*)* = chi chi* for random chi") {
  std::mt19937_64 rng(5);
  for (const auto& name : oracle::group_names()) {
    const auto ring = catalog_ring(name);
    for (int i = 0; i < 20; ++i) {
      GeneralizedCharacter x(ring, random_coeffs(rng, ring.rank(), ring.rank(), -4, 4));
      const auto prod = multiply(x, dual_char(x));
      CHECK(dual_char(prod) == prod);
    }
  }
}

TEST_CASE("characters from different rings do not mix") {
  const auto z2 = catalog_ring("Z2");
  const auto z3 = catalog_ring("Z3");
  const auto a = GeneralizedCharacter::basis(z2, 1);
  const auto b = GeneralizedCharacter::basis(z3, 1);
  CHECK_THROWS_AS(multiply(a, b), UsageError);
  CHECK_THROWS_AS(leq(a, b), UsageError);
  CHECK_THROWS_AS(GeneralizedCharacter(z2, {1, 2, 3}), UsageError);
}

TEST_CASE("coefficient overflow is detected") {
  const auto z2 = catalog_ring("Z2");
  const Multiplicity big = Multiplicity{1} << 40;
  GeneralizedCharacter x(z2, {big, big});
  CHECK_THROWS_AS(multiply(x, x), std::overflow_error);
}

TEST_CASE("100 random triples per catalog ring: commutative, associative, dual-compatible, oracle-exact") {
  std::mt19937_64 rng(20240917);
  auto check_ring = [&](const FusionRing& ring, const oracle::Dense& dense, int support) {
    for (int i = 0; i < 100; ++i) {
      auto ca = random_coeffs(rng, ring.rank(), support, -3, 3);
      auto cb = random_coeffs(rng, ring.rank(), support, -3, 3);
      auto cc = random_coeffs(rng, ring.rank(), support, -3, 3);
      GeneralizedCharacter a(ring, ca), b(ring, cb), c(ring, cc);
      REQUIRE(product_is_complete(a, b));
      const auto ab = multiply(a, b);
      CHECK(ab.coeffs() == oracle::multiply(dense, ca, cb));
      CHECK(ab == multiply(b, a));
      CHECK(multiply(ab, c) == multiply(a, multiply(b, c)));
      CHECK(dual_char(ab) == multiply(dual_char(a), dual_char(b)));
      CHECK(dual_char(a).coeffs() == oracle::dual_of(dense, ca));
    }
  };
  for (const auto& name : oracle::group_names()) {
    CAPTURE(name);
    const auto ring = catalog_ring(name);
    check_ring(ring, oracle::load_group_dense(name), ring.rank());
  }
  for (int twice : {2, 4, 10}) {
    CAPTURE(twice);
    // supports below a third of the bound keep every product complete
    check_ring(su2::export_truncated_ring(twice), oracle::su2_dense(twice), twice / 3 + 1);
  }
}

TEST_CASE("positive cone is closed under multiplication") {
  std::mt19937_64 rng(3);
  for (const auto& name : oracle::group_names()) {
    const auto ring = catalog_ring(name);
    for (int i = 0; i < 20; ++i) {
      GeneralizedCharacter a(ring, random_coeffs(rng, ring.rank(), ring.rank(), 0, 4));
      GeneralizedCharacter b(ring, random_coeffs(rng, ring.rank(), ring.rank(), 0, 4));
      CHECK(multiply(a, b).is_character());
    }
  }
}

TEST_CASE("clipped products are flagged") {
  const auto su2 = su2::export_truncated_ring(2);
  const auto one = GeneralizedCharacter::basis(su2, 2);
  const auto half = GeneralizedCharacter::basis(su2, 1);
  CHECK(product_is_complete(half, half));
  CHECK_FALSE(product_is_complete(one, one));
  CHECK_FALSE(su2.pair_complete(1, 2));
  CHECK(basis_vector(3, 1) == half.coeffs());
}
