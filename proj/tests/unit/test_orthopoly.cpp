#include <doctest.h>

#include "octabasic/families.hpp"
#include "octabasic/orthopoly.hpp"
#include "octabasic/qseries.hpp"

using namespace octabasic;

namespace {
const Poly a = Poly::var(VarId::a);
const Poly b = Poly::var(VarId::b);
const Poly x = Poly::var(VarId::x);
const Poly q = Poly::var(VarId::q);

// Hermite-like chain with b_n = 0, lambda_n = n: moments are double factorials.
RecurrenceCoeffs hermite() { return {"hermite", [](int) { return Poly(); }, [](int n) { return Poly(n); }}; }

/// Moments by the matrix-power definition: (J^n)_{00} with a dense Jacobi matrix.
MomentSequence moments_by_matrix(const RecurrenceCoeffs& c, int N) {
  const int dim = N + 1;
  std::vector<std::vector<Poly>> J(dim, std::vector<Poly>(dim));
  for (int i = 0; i < dim; ++i) {
    J[i][i] = c.b_of(i);
    if (i + 1 < dim) {
      J[i][i + 1] = c.lambda_of(i + 1);
      J[i + 1][i] = 1;
    }
  }
  std::vector<Poly> row(dim);
  row[0] = 1;
  MomentSequence mu{1};
  for (int n = 1; n <= N; ++n) {
    std::vector<Poly> next(dim);
    for (int i = 0; i < dim; ++i)
      for (int k = 0; k < dim; ++k)
        if (!row[k].is_zero() && !J[k][i].is_zero()) next[i] += row[k] * J[k][i];
    row = std::move(next);
    mu.push_back(row[0]);
  }
  return mu;
}
}  // namespace

TEST_CASE("monic sequence") {
  const auto p = monic_sequence(octabasic_coeffs(), 3);
  REQUIRE(p.size() == 4);
  CHECK(p[0] == 1);
  CHECK(p[1] == x - a);
  CHECK(p[3].max_degree(VarId::x) == 3);
  const auto h = monic_sequence(hermite(), 4);
  CHECK(h[4] == x.pow(4) - 6 * x * x + 3);
  const auto s2 = monic_sequence(sum2_coeffs(), 1);
  CHECK(s2[1] == x - q);
}

TEST_CASE("moments") {
  const auto mu = moments_from_recurrence(octabasic_coeffs(), 2);
  CHECK(mu[0] == 1);
  CHECK(mu[1] == a);
  CHECK(mu[2] == a * a + a * b);
  const auto h = moments_from_recurrence(hermite(), 8);
  CHECK(h[7].is_zero());
  CHECK(h[8] == 105);
}

TEST_CASE("level dynamic program matches the dense matrix power") {
  CHECK(moments_from_recurrence(octabasic_coeffs(), 5) == moments_by_matrix(octabasic_coeffs(), 5));
  CHECK(moments_from_recurrence(sum2_coeffs(), 7) == moments_by_matrix(sum2_coeffs(), 7));
}

TEST_CASE("moment functional") {
  const auto mu = moments_from_recurrence(octabasic_coeffs(), 4);
  const auto p = monic_sequence(octabasic_coeffs(), 2);
  CHECK(apply_functional(mu, p[2]).is_zero());
  CHECK(apply_functional(mu, p[1]).is_zero());
  CHECK(apply_functional(mu, x * x) == mu[2]);
  CHECK_THROWS_AS(apply_functional(mu, x.pow(5)), DegreeTooHigh);
  // Bilinear pairing agrees with the functional of the product.
  CHECK(functional_pairing(mu, p[1], p[2] + x) == apply_functional(mu, p[1] * (p[2] + x)));
}

TEST_CASE("orthogonality") {
  CHECK(orthogonality_check(octabasic_coeffs(), 3));
  CHECK(orthogonality_check(sum2_coeffs(), 3));
  CHECK(orthogonality_check(qlaguerre_coeffs(0), 3));
  CHECK(orthogonality_check(qjacobi_coeffs(0), 5));
  CHECK(orthogonality_check(hermite(), 6));
  SUBCASE("a perturbed sequence is caught") {
    RecurrenceCoeffs bad = octabasic_coeffs();
    const auto orig = bad.lambda_of;
    bad.lambda_of = [orig](int n) { return n == 2 ? orig(n) + 1 : orig(n); };
    // Moments from the perturbed chain, polynomials from the original one.
    const auto mu = moments_from_recurrence(bad, 6);
    const auto p = monic_sequence(octabasic_coeffs(), 3);
    CHECK_FALSE(functional_pairing(mu, p[3], p[3]) == orig(1) * orig(2) * orig(3));
  }
}
