#include "octabasic/qseries.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace octabasic {

Poly bracket_q(int n) {
  if (n < 0) throw std::invalid_argument("bracket_q: negative n");
  std::vector<Term> terms;
  for (int i = 0; i < n; ++i) terms.push_back({Monomial::var(VarId::q, i), 1});
  return Poly::from_terms(std::move(terms));
}

Poly bracket2(int n, VarId c, VarId d) {
  if (n < 0) throw std::invalid_argument("bracket2: negative n");
  if (c == d) throw std::invalid_argument("bracket2: variables must differ");
  std::vector<Term> terms;
  for (int i = 0; i < n; ++i) {
    Monomial m = Monomial::var(c, n - 1 - i);
    m.set_exp(d, i);
    terms.push_back({m, 1});
  }
  return Poly::from_terms(std::move(terms));
}

Poly qfactorial(int n) {
  if (n < 0) throw std::invalid_argument("qfactorial: negative n");
  Poly f(1);
  for (int k = 2; k <= n; ++k) f *= bracket_q(k);
  return f;
}

Poly qbinomial(int n, int k) {
  if (k < 0 || k > n) return {};
  // Row-by-row Pascal recurrence: [n,k] = [n-1,k-1] + q^k [n-1,k].
  std::vector<Poly> row{Poly(1)};
  for (int m = 1; m <= n; ++m) {
    std::vector<Poly> next(m + 1);
    for (int j = 0; j <= m; ++j) {
      Poly left = j >= 1 ? row[j - 1] : Poly{};
      Poly right = j < m ? row[j] * Poly::var(VarId::q, j) : Poly{};
      next[j] = left + right;
    }
    row = std::move(next);
  }
  return row[k];
}

Poly qpochhammer_power(int alpha, int n) {
  if (alpha < 0) throw std::invalid_argument("qpochhammer_power: alpha must be nonnegative");
  if (n < 0) throw std::invalid_argument("qpochhammer_power: negative n");
  Poly prod(1);
  for (int i = 0; i < n; ++i) prod *= Poly(1) - Poly::var(VarId::q, alpha + 1 + i);
  return prod;
}

Poly falling_bracket_product(int n, int k) {
  Poly prod(1);
  for (int i = 0; i < k; ++i) prod *= bracket_q(n - i);
  return prod;
}

}  // namespace octabasic
