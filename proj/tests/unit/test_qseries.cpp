#include <doctest.h>

#include "octabasic/qseries.hpp"
#include "support/oracle.hpp"

using namespace octabasic;

namespace {
const Poly q = Poly::var(VarId::q);
}

TEST_CASE("brackets") {
  CHECK(bracket_q(0).is_zero());
  CHECK(bracket_q(1) == 1);
  CHECK(bracket_q(4) == 1 + q + q.pow(2) + q.pow(3));
  const Poly r = Poly::var(VarId::r), s = Poly::var(VarId::s);
  CHECK(bracket2(3, VarId::r, VarId::s) == r * r + r * s + s * s);
  CHECK(bracket2(0, VarId::r, VarId::s).is_zero());
  for (int n = 0; n <= 12; ++n) {
    CHECK(bracket_q(n) == oracle::geometric(n));
    CHECK(bracket2(n, VarId::t, VarId::u) == oracle::homogeneous(n, VarId::t, VarId::u));
    // (c - d)[n]_{c,d} = c^n - d^n
    const Poly c = Poly::var(VarId::p), d = Poly::var(VarId::w);
    CHECK((c - d) * bracket2(n, VarId::p, VarId::w) == c.pow(n) - d.pow(n));
  }
}

TEST_CASE("q-factorial") {
  CHECK(qfactorial(0) == 1);
  CHECK(qfactorial(3) == 1 + 2 * q + 2 * q.pow(2) + q.pow(3));
  for (int n = 0; n <= 8; ++n) {
    Poly inv;
    for (auto [e, c] : oracle::inversion_distribution(n)) inv += Poly(static_cast<long long>(c)) * q.pow(e);
    CHECK(qfactorial(n) == inv);
  }
}

TEST_CASE("q-binomial") {
  CHECK(qbinomial(2, 1) == 1 + q);
  CHECK(qbinomial(4, 2) == 1 + q + 2 * q.pow(2) + q.pow(3) + q.pow(4));
  CHECK(qbinomial(3, 4).is_zero());
  CHECK(qbinomial(3, -1).is_zero());
  for (int n = 0; n <= 9; ++n) {
    for (int k = 0; k <= n; ++k) {
      CHECK(qbinomial(n, k) == qbinomial(n, n - k));
      CHECK(qbinomial(n, k) * qfactorial(k) * qfactorial(n - k) == qfactorial(n));
    }
  }
}

TEST_CASE("q-Pochhammer with a power base") {
  CHECK(qpochhammer_power(0, 0) == 1);
  CHECK(qpochhammer_power(0, 2) == 1 - q - q * q + q.pow(3));
  for (int alpha = 0; alpha <= 3; ++alpha)
    for (int n = 0; n <= 5; ++n) {
      Poly expect = 1;
      for (int i = 0; i < n; ++i) expect *= 1 - q.pow(alpha + 1 + i);
      CHECK(qpochhammer_power(alpha, n) == expect);
    }
}

TEST_CASE("pair count helper") {
  static_assert(binom2(-1) == 1);
  static_assert(binom2(0) == 0);
  static_assert(binom2(1) == 0);
  static_assert(binom2(5) == 10);
  CHECK(falling_bracket_product(5, 0) == 1);
  CHECK(falling_bracket_product(4, 2) == bracket_q(4) * bracket_q(3));
  CHECK(falling_bracket_product(6, 6) == qfactorial(6));
}
