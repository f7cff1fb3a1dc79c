#include "octabasic/orthopoly.hpp"

#include <algorithm>

namespace octabasic {

std::vector<Poly> monic_sequence(const RecurrenceCoeffs& c, int N) {
  if (N < 0) throw std::invalid_argument("monic_sequence: negative N");
  const Poly x = Poly::var(VarId::x);
  std::vector<Poly> p;
  p.reserve(N + 1);
  p.emplace_back(1);
  if (N >= 1) p.push_back(x - c.b_of(0));
  for (int n = 1; n < N; ++n) p.push_back((x - c.b_of(n)) * p[n] - c.lambda_of(n) * p[n - 1]);
  return p;
}

MomentSequence moments_from_recurrence(const RecurrenceCoeffs& c, int N) {
  if (N < 0) throw std::invalid_argument("moments_from_recurrence: negative N");
  // level[k] holds the weighted count of partial paths of the current length
  // ending at height k. Heights above N - m cannot return to 0 in time.
  std::vector<Poly> b(N + 1), lambda(N + 2);
  for (int k = 0; k <= N; ++k) b[k] = c.b_of(k);
  for (int k = 1; k <= N + 1; ++k) lambda[k] = c.lambda_of(k);

  MomentSequence mu;
  mu.reserve(N + 1);
  std::vector<Poly> level{Poly(1)};
  mu.push_back(level[0]);
  for (int m = 1; m <= N; ++m) {
    const int top = std::min(m, N - m);
    std::vector<Poly> next(top + 1);
    for (int k = 0; k <= top; ++k) {
      Poly acc;
      if (k >= 1 && k - 1 < static_cast<int>(level.size())) acc += level[k - 1];
      if (k < static_cast<int>(level.size())) acc += b[k] * level[k];
      if (k + 1 < static_cast<int>(level.size())) acc += lambda[k + 1] * level[k + 1];
      next[k] = std::move(acc);
    }
    level = std::move(next);
    mu.push_back(level[0]);
  }
  return mu;
}

Poly apply_functional(const MomentSequence& mu, const Poly& f) {
  if (f.is_zero()) return {};
  if (f.min_degree(VarId::x) < 0) throw std::invalid_argument("apply_functional: negative power of x");
  const int deg = f.max_degree(VarId::x);
  if (deg >= static_cast<int>(mu.size()))
    throw DegreeTooHigh("apply_functional: degree " + std::to_string(deg) + " needs moment mu_" +
                        std::to_string(deg));
  Poly out;
  for (int k = 0; k <= deg; ++k) {
    Poly ck = f.coefficient_of(VarId::x, k);
    if (!ck.is_zero()) out += ck * mu[k];
  }
  return out;
}

Poly functional_pairing(const MomentSequence& mu, const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) return {};
  const int dg = g.max_degree(VarId::x);
  if (g.min_degree(VarId::x) < 0) throw std::invalid_argument("functional_pairing: negative power of x");
  Poly out;
  for (int k = 0; k <= dg; ++k) {
    Poly gk = g.coefficient_of(VarId::x, k);
    if (gk.is_zero()) continue;
    Poly shifted = f * Poly::var(VarId::x, k);
    Poly lk = apply_functional(mu, shifted);
    if (!lk.is_zero()) out += gk * lk;
  }
  return out;
}

OrthogonalityReport orthogonality_report(const RecurrenceCoeffs& c, int N) {
  if (N < 1) throw std::invalid_argument("orthogonality_check: N must be >= 1");
  const auto p = monic_sequence(c, N);
  const auto mu = moments_from_recurrence(c, 2 * N);
  Poly norm(1);
  for (int n = 0; n <= N; ++n) {
    if (n >= 1) norm *= c.lambda_of(n);
    // L(x^k p_n) for k <= n; every pairing with p_m, m <= n, is a combination
    // of these, so each is computed once instead of once per m.
    std::vector<Poly> shifted(n + 1);
    std::vector<Poly> coeff(n + 1);
    for (int k = 0; k <= n; ++k) coeff[k] = p[n].coefficient_of(VarId::x, k);
    for (int k = 0; k <= n; ++k)
      for (int j = 0; j <= n; ++j)
        if (!coeff[j].is_zero()) shifted[k] += coeff[j] * mu[j + k];
    for (int m = 0; m <= n; ++m) {
      Poly pairing;
      for (int k = 0; k <= m; ++k) {
        const Poly gk = p[m].coefficient_of(VarId::x, k);
        if (!gk.is_zero() && !shifted[k].is_zero()) pairing += gk * shifted[k];
      }
      if (m < n ? !pairing.is_zero() : pairing != norm) return {false, n, m};
    }
  }
  return {};
}

bool orthogonality_check(const RecurrenceCoeffs& c, int N) { return orthogonality_report(c, N).ok; }

}  // namespace octabasic
