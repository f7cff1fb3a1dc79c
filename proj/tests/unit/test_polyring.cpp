#include <doctest.h>

#include <cmath>
#include <random>

#include "octabasic/poly_json.hpp"
#include "octabasic/polyring.hpp"
#include "support/oracle.hpp"

using namespace octabasic;

namespace {
const Poly a = Poly::var(VarId::a);
const Poly b = Poly::var(VarId::b);
const Poly q = Poly::var(VarId::q);
}  // namespace

TEST_CASE("constructing and printing") {
  CHECK(Poly().is_zero());
  CHECK(Poly(0).is_zero());
  CHECK((a * a + a * b).to_string() == "a*b + a^2");
  CHECK(Poly::var(VarId::q, -1).to_string() == "q^-1");
  CHECK((a - a).is_zero());
  CHECK((2 * a - 3).to_string().find("-3") != std::string::npos);
}

TEST_CASE("product of brackets expands to 3!_q") {
  const Poly f = (1 + q) * (1 + q + q * q);
  CHECK(f == 1 + 2 * q + 2 * q.pow(2) + q.pow(3));
  CHECK(f == oracle::q_factorial(3));
}

TEST_CASE("ring axioms hold on random Laurent polynomials") {
  std::mt19937 rng(20240611);
  for (int iter = 0; iter < 200; ++iter) {
    const Poly f = oracle::random_poly(rng), g = oracle::random_poly(rng), h = oracle::random_poly(rng);
    CHECK(f + g == g + f);
    CHECK(f * g == g * f);
    CHECK((f + g) + h == f + (g + h));
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK(f - f == Poly());
    CHECK(f * 1 == f);
    CHECK(f * Poly() == Poly());
    CHECK(add(f, g) == f + g);
    CHECK(mul(f, g) == f * g);
  }
}

TEST_CASE("large products agree with repeated small products") {
  // Exercises the merge and hash accumulation paths against single-term products.
  std::mt19937 rng(7);
  for (int iter = 0; iter < 5; ++iter) {
    const Poly f = oracle::random_poly(rng, 90, 6), g = oracle::random_poly(rng, 90, 6);
    Poly expect;
    for (const auto& t : g.terms()) expect += f * Poly::monomial(t.mono, t.coeff);
    CHECK(f * g == expect);
    // Coefficients past 2^40 take the arbitrary-precision accumulation path.
    const Poly wide = Poly(BigInt(1) << 70);
    CHECK((f * wide) * (g * wide) == expect * wide * wide);
  }
}

TEST_CASE("coefficients grow beyond machine words") {
  const Poly f = (1 + a).pow(100);
  Monomial m;
  m.set_exp(VarId::a, 50);
  CHECK(f.coeff(m) == BigInt("100891344545564193334812497256"));
  CHECK(eval_numeric(f, {{VarId::a, 1.0}}) == doctest::Approx(std::pow(2.0L, 100)).epsilon(1e-12));
}

TEST_CASE("substitution") {
  SUBCASE("monomial map with a negative power on a^2+ab") {
    const Poly f = a * a + a * b;
    CHECK(substitute(f, {{VarId::a, Poly::var(VarId::q, -1)}, {VarId::b, 1}}) ==
          Poly::var(VarId::q, -2) + Poly::var(VarId::q, -1));
    CHECK(substitute(f, {{VarId::a, q}, {VarId::b, 1}}) == q * q + q);
  }
  SUBCASE("variables missing from the map are left alone") {
    CHECK(substitute(a * q, {{VarId::a, 2}}) == 2 * q);
  }
  SUBCASE("negative exponent needs a unit monomial image") {
    CHECK_THROWS_AS(substitute(Poly::var(VarId::a, -1), {{VarId::a, 1 + q}}), NonInvertibleSubstitution);
    CHECK_THROWS_AS(substitute(Poly::var(VarId::a, -1), {{VarId::a, 2}}), NonInvertibleSubstitution);
    CHECK(substitute(Poly::var(VarId::a, -2), {{VarId::a, -q}}) == Poly::var(VarId::q, -2));
  }
  SUBCASE("substitution is a ring homomorphism") {
    std::mt19937 rng(99);
    const Substitution poly_map{{VarId::a, 1 + q}, {VarId::b, q * q - 2}, {VarId::r, q}};
    for (int iter = 0; iter < 100; ++iter) {
      const Poly f = oracle::random_poly(rng, 4, 3, false), g = oracle::random_poly(rng, 4, 3, false);
      CHECK(substitute(f * g, poly_map) == substitute(f, poly_map) * substitute(g, poly_map));
      CHECK(substitute(f + g, poly_map) == substitute(f, poly_map) + substitute(g, poly_map));
    }
    const Substitution laurent_map{{VarId::a, Poly::var(VarId::q, -1)}, {VarId::b, -q}, {VarId::r, q.pow(2)}};
    for (int iter = 0; iter < 100; ++iter) {
      const Poly f = oracle::random_poly(rng), g = oracle::random_poly(rng);
      CHECK(substitute(f * g, laurent_map) == substitute(f, laurent_map) * substitute(g, laurent_map));
    }
  }
}

TEST_CASE("numeric evaluation") {
  CHECK(eval_numeric(oracle::q_factorial(3), {{VarId::q, 0.5}}) == doctest::Approx(2.625).epsilon(1e-15));
  CHECK_THROWS_AS(eval_numeric(a * q, {{VarId::q, 0.5}}), std::invalid_argument);
  SUBCASE("evaluation commutes with substitution") {
    std::mt19937 rng(5);
    const Substitution m{{VarId::a, Poly::var(VarId::q, -1)}, {VarId::b, 1 + q}, {VarId::r, q.pow(2)}};
    for (int iter = 0; iter < 100; ++iter) {
      // b maps to a non-monomial, so keep exponents non-negative.
      const Poly f = oracle::random_poly(rng, 5, 3, false) * Poly::var(VarId::q, -2) * Poly::var(VarId::a, -1);
      const double qv = 0.37;
      const double lhs = eval_numeric(substitute(f, m), {{VarId::q, qv}});
      const double rhs = eval_numeric(f, {{VarId::a, 1 / qv}, {VarId::b, 1 + qv}, {VarId::r, qv * qv}, {VarId::q, qv}});
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
  }
}

TEST_CASE("exact division") {
  CHECK(exact_divide(q + q * q, 1 + q) == q);
  CHECK(exact_divide(a * a + a * b, a) == a + b);
  CHECK_THROWS_AS(exact_divide(1 + q * q, 1 + q), InexactDivision);
  CHECK_THROWS_AS(exact_divide(a, Poly()), DivisionByZero);
  SUBCASE("products divide back") {
    std::mt19937 rng(11);
    for (int iter = 0; iter < 100; ++iter) {
      const Poly f = oracle::random_poly(rng), g = oracle::random_poly(rng);
      if (g.is_zero()) continue;
      CHECK(exact_divide(f * g, g) == f);
    }
  }
}

TEST_CASE("json round trip") {
  std::mt19937 rng(3);
  for (int iter = 0; iter < 100; ++iter) {
    const Poly f = oracle::random_poly(rng) * Poly(BigInt("123456789012345678901234567890"));
    CHECK(poly_from_json(poly_to_json(f)) == f);
  }
  const auto j = poly_to_json(a * a + a * b);
  REQUIRE(j.size() == 2);
  CHECK(j[0]["coeff"] == "1");
  CHECK(j[0]["exps"]["a"] == 1);
  CHECK(j[0]["exps"]["b"] == 1);
}
