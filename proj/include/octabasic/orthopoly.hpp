#pragma once

// Monic orthogonal polynomials from three-term recurrences, their moments,
// and the moment functional.

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "octabasic/polyring.hpp"

namespace octabasic {

/// Generator of the recurrence p_{n+1} = (x - b_n) p_n - lambda_n p_{n-1}.
/// b_of is queried for n >= 0, lambda_of only for n >= 1.
struct RecurrenceCoeffs {
  std::string name;
  std::function<Poly(int)> b_of;
  std::function<Poly(int)> lambda_of;
};

using MomentSequence = std::vector<Poly>;

struct DegreeTooHigh : std::out_of_range {
  using std::out_of_range::out_of_range;
};

/// p_0 .. p_N as polynomials in x.
std::vector<Poly> monic_sequence(const RecurrenceCoeffs& c, int N);

/// mu_0 .. mu_N by the weighted Motzkin-path (level) dynamic program, which is
/// the (0,0) entry of powers of the Jacobi operator.
MomentSequence moments_from_recurrence(const RecurrenceCoeffs& c, int N);

/// Linear functional x^k -> mu_k. Throws DegreeTooHigh when deg_x f exceeds
/// the available moments, std::invalid_argument for negative powers of x.
Poly apply_functional(const MomentSequence& mu, const Poly& f);

/// L(f*g) computed bilinearly as sum_k [x^k]g * L(x^k f), without forming f*g.
Poly functional_pairing(const MomentSequence& mu, const Poly& f, const Poly& g);

struct OrthogonalityReport {
  bool ok = true;
  // First failing (n, m) pair, m == n meaning the norm check.
  int fail_n = -1;
  int fail_m = -1;
};

/// Checks L(p_n p_m) = 0 for m < n <= N and L(p_n^2) = lambda_1...lambda_n,
/// with moments computed to order 2N.
OrthogonalityReport orthogonality_report(const RecurrenceCoeffs& c, int N);
bool orthogonality_check(const RecurrenceCoeffs& c, int N);

}  // namespace octabasic
