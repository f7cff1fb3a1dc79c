#include <doctest.h>

#include "octabasic/families.hpp"
#include "octabasic/oddfamily.hpp"
#include "octabasic/qseries.hpp"
#include "support/oracle.hpp"

using namespace octabasic;

namespace {
const Poly a = Poly::var(VarId::a);
const Poly b = Poly::var(VarId::b);
const Poly q = Poly::var(VarId::q);
Poly qp(int e) { return Poly::var(VarId::q, e); }

const Permutation kZeroCase = Permutation::parse("9 | 1 5 7 | 2 6 | 4 | 3 8");
const Permutation kLongCase = Permutation::parse("7 12 | 1 6 9 | 3 | 2 10 11 | 5 | 4 8");
}  // namespace

TEST_CASE("symmetric chain") {
  const SymmetricChain chain;
  const auto odd = odd_coeffs(chain);
  CHECK(odd.b_of(0) == a + b);
  CHECK(odd.lambda_of(1) == a * b * (Poly::var(VarId::r) + Poly::var(VarId::s)));
  CHECK(chain.coeffs().b_of(3).is_zero());
  const auto even = even_coeffs(chain);
  const auto ident = specialize(octabasic_coeffs(), {"identify", chain_identification()});
  for (int n = 0; n <= 6; ++n) CHECK(even.b_of(n) == ident.b_of(n));
  for (int n = 1; n <= 6; ++n) CHECK(even.lambda_of(n) == ident.lambda_of(n));
}

TEST_CASE("odd moments") {
  const SymmetricChain chain;
  const auto mu = odd_moments(chain, 4);
  CHECK(mu[1] == a + b);
  CHECK(odd_quotient_relation(chain, 5));
  CHECK(odd_moment_closed_form(1, 1) == qp(-1) + 1);
  CHECK(odd_moment_closed_form(2, 1) == 1 + q);
  CHECK(odd_moment_closed_form(3, 1) == qp(-2) + qp(-1));
  for (int which = 1; which <= 3; ++which) CHECK(odd_specialization_check(which, 6));
  SUBCASE("direct specialization of the first odd moment") {
    CHECK(substitute(mu[1], spec_theorem2().assignments) == qp(-1) + 1);
    CHECK(substitute(mu[1], spec_theorem3().assignments) == q + 1);
    CHECK(substitute(mu[1], spec_qlaguerre().assignments) == qp(-1) + qp(-2));
  }
  SUBCASE("second family gives (n+1)!_q") {
    const auto spec = moments_from_recurrence(specialize(odd_coeffs(chain), spec_theorem3()), 6);
    for (int n = 0; n <= 6; ++n) CHECK(spec[n] == qfactorial(n + 1));
  }
}

TEST_CASE("auxiliary statistic on the worked examples") {
  CHECK(aux_stat(kZeroCase).n_of_sigma == 0);
  const auto ctx = aux_stat(kLongCase);
  CHECK(ctx.d == 9);
  REQUIRE(ctx.c.has_value());
  CHECK(*ctx.c == 3);
  CHECK(ctx.nleft == 1);
  CHECK(ctx.n_of_sigma == 11);
}

TEST_CASE("starred straddles on the worked example") {
  CHECK(lsg_star(kLongCase, 5) == 1);
  CHECK(lsg_star(kLongCase, 10) == 2);
  const auto s = star_sums(kLongCase);
  CHECK(s.lsg == 10);
  CHECK(s.rsg == 8);
}

TEST_CASE("scan-based statistic agrees with the definitional one") {
  PermutationScan scan;
  for (int n = 1; n <= 7; ++n) {
    for_each_permutation(n, [&](std::span<const std::uint8_t> word) {
      scan.load(word);
      const Permutation sigma(std::vector<int>(word.begin(), word.end()));
      const auto both = theorem4_statistics(scan);
      REQUIRE(both[static_cast<int>(RunTerm::run_minus_1)] == theorem4_statistic(sigma, RunTerm::run_minus_1));
      REQUIRE(both[static_cast<int>(RunTerm::n_minus_run)] == theorem4_statistic(sigma, RunTerm::n_minus_run));
    });
  }
}

TEST_CASE("starred statistic is Mahonian") {
  CHECK(theorem4_distribution(2) == QDistribution{{0, 1}, {1, 1}});
  CHECK(theorem4_distribution(3) == QDistribution{{0, 1}, {1, 2}, {2, 2}, {3, 1}});
  for (int n = 1; n <= 7; ++n) {
    const auto both = theorem4_distributions(n);
    CHECK(both[0] == oracle::inversion_distribution(n));
    CHECK(both[1] == oracle::inversion_distribution(n));
  }
}

TEST_CASE("restricted class") {
  CHECK(restricted_predicate(Permutation::parse("1 2")));
  CHECK_FALSE(restricted_predicate(Permutation::parse("2 1")));
  CHECK(restricted_count(1) == 1);
  CHECK(restricted_count(2) == 2);
  CHECK(restricted_count(5) == 120);
}
