#pragma once

// q-brackets and friends, all as division-free polynomials.

#include "octabasic/polyring.hpp"

namespace octabasic {

/// [n]_q = 1 + q + ... + q^{n-1}; zero for n = 0.
Poly bracket_q(int n);

/// [n]_{c,d} = sum_{i<n} c^{n-1-i} d^i. Requires c != d.
Poly bracket2(int n, VarId c, VarId d);

Poly qfactorial(int n);

/// Gaussian binomial; zero outside 0 <= k <= n.
Poly qbinomial(int n, int k);

/// (q^{alpha+1}; q)_n for alpha >= 0.
Poly qpochhammer_power(int alpha, int n);

/// m(m-1)/2 for every integer m, so binom2(-1) == 1.
constexpr long long binom2(long long m) { return m * (m - 1) / 2; }

/// [n]_q [n-1]_q ... [n-k+1]_q (k factors, descending); 1 for k <= 0.
Poly falling_bracket_product(int n, int k);

}  // namespace octabasic
