#pragma once

// The symmetric chain behind the octabasic family under r=p, s=q, t=v, u=w,
// its even and odd halves, and the starred statistics of the odd case.

#include <array>
#include <cstdint>
#include <optional>

#include "octabasic/families.hpp"
#include "octabasic/orthopoly.hpp"
#include "octabasic/permstat.hpp"

namespace octabasic {

/// b_n = 0, lambda_{2n} = b[n]_{t,u}, lambda_{2n+1} = a[n+1]_{r,s}.
struct SymmetricChain {
  Poly lambda_even_of(int n) const;  // lambda_{2n}, n >= 1
  Poly lambda_odd_of(int n) const;   // lambda_{2n+1}, n >= 0
  Poly lambda_of(int m) const;       // lambda_m, m >= 1
  RecurrenceCoeffs coeffs() const;
};

/// p -> r, q -> s, v -> t, w -> u.
Substitution chain_identification();

RecurrenceCoeffs even_coeffs(const SymmetricChain& chain);
RecurrenceCoeffs odd_coeffs(const SymmetricChain& chain);

MomentSequence odd_moments(const SymmetricChain& chain, int N);

/// mu_n(odd) == mu_{n+1}(even) / mu_1(even) for n <= N, by exact division.
bool odd_quotient_relation(const SymmetricChain& chain, int N);

/// which = 1: q^-n (n+1)!_q;  2: (n+1)!_q;  3: q^{-(n^2+3n)/2} (n+1)!_q.
Poly odd_moment_closed_form(int which, int n);
/// The specialization behind each odd family: 1 -> T2, 2 -> T3, 3 -> QL.
SpecFamily odd_family_specialization(int which);
bool odd_specialization_check(int which, int N);

struct AuxStatContext {
  int d = 0;                 // largest element of the run containing 1
  std::optional<int> c;      // last singleton left-to-right minimum after that run
  int nleft = 0;             // elements before 1 strictly between c and d
  int n_of_sigma = 0;        // 2(d - c) - nleft, or 0 without c
};

AuxStatContext aux_stat(const Permutation& sigma);

int lsg_star(const Permutation& sigma, int value);
int rsg_star(const Permutation& sigma, int value);

struct StarSums {
  int lsg = 0;
  int rsg = 0;
};
StarSums star_sums(const Permutation& sigma);

/// run term + 2 lsg* + rsg* + n(sigma); run term is run-1 or n-run.
int theorem4_statistic(const Permutation& sigma, RunTerm run_term = RunTerm::run_minus_1);

/// Same statistic from a scan; both variants at once (index by RunTerm).
std::array<int, 2> theorem4_statistics(const PermutationScan& scan);

QDistribution theorem4_distribution(int n, RunTerm run_term = RunTerm::run_minus_1);
std::array<QDistribution, 2> theorem4_distributions(int n);

/// 1 and n+1 share a run and no left-to-right minimum of the part after that
/// run is a singleton run.
bool restricted_predicate(const Permutation& sigma);
/// Number of sigma in S_{n+1} satisfying restricted_predicate.
std::uint64_t restricted_count(int n);

}  // namespace octabasic
