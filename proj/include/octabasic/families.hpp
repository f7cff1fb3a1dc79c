#pragma once

// Concrete recurrence families: the ten-parameter octabasic family, its three
// q-specializations, their explicit polynomial formulas and moment closed
// forms, and numeric checks of the associated discrete measures.

#include <string>
#include <vector>

#include <json.hpp>

#include "octabasic/orthopoly.hpp"
#include "octabasic/polyring.hpp"

namespace octabasic {

/// b_n = a[n+1]_{r,s} + b[n]_{t,u},  lambda_n = ab[n]_{p,q}[n]_{v,w}.
RecurrenceCoeffs octabasic_coeffs();

struct Specialization {
  std::string name;
  Substitution assignments;  // a,b,r,s,t,u,p,q,v,w -> Laurent monomials in q
};

enum class SpecFamily { T2, T3, QL };

std::string_view spec_family_name(SpecFamily f);

/// r,t,p,v -> q^2; s,u,w -> q; a -> 1/q; b -> 1.
Specialization spec_theorem2();
/// As spec_theorem2 with a -> q.
Specialization spec_theorem3();
/// r,t,p,v -> q^-2; s,u,w -> q^-1; a -> q^-1; b -> q^-2.
Specialization spec_qlaguerre();
Specialization specialization(SpecFamily f);

RecurrenceCoeffs specialize(const RecurrenceCoeffs& c, const Specialization& s);

/// Monic little q-Jacobi p_n(xq(1-q); q^alpha, 0; q).
RecurrenceCoeffs qjacobi_coeffs(int alpha);
/// Explicit sum for the alpha = 0 polynomials.
Poly qjacobi_explicit(int n);

/// b_n = q^{n+1}[n+1]_q + q^{n-1}[n]_q,  lambda_n = q^{2n-1}[n]_q^2.
RecurrenceCoeffs sum2_coeffs();
/// Explicit sum; the k = n summand already is the constant term, which is
/// therefore not added a second time.
Poly sum2_explicit(int n);

/// Monic q-Laguerre L_n^alpha(x(1-q); q).
RecurrenceCoeffs qlaguerre_coeffs(int alpha);
Poly qlaguerre_explicit(int n, int alpha);

/// T2: q^-n n!_q;  T3: 1 for n = 0, else q n!_q;  QL: q^{-binom(n+1,2)} n!_q.
Poly moment_closed_form(SpecFamily f, int n);

/// q^-n [alpha+1]_q [alpha+2]_q ... [alpha+n]_q, the moments of the rescaled
/// little q-Jacobi measure with second parameter 0.
Poly qjacobi_rescaled_moment(int alpha, int n);

// ---------------------------------------------------------------- numerics

/// (z; q)_inf truncated once a factor is within 1e-16 of 1 or after
/// max_factors factors.
double qpochhammer_infinite(double z, double q, int max_factors);

struct MeasureAtom {
  double location = 0;
  double mass = 0;
};

struct DiscreteMeasure {
  double q = 0;
  int truncation = 0;
  std::vector<MeasureAtom> atoms;

  double moment(int n) const;
};

/// Masses q^i (q;q)_inf/(q;q)_{i-1} at q^{i-1}/(1-q) for i = 1..I, plus 1-q at 0.
DiscreteMeasure prop1_measure(double q, int truncation);
/// Masses q^{(alpha+1)i} (q^{alpha+1};q)_inf/(q;q)_i at q^i/(q(1-q)), i < I.
DiscreteMeasure qjacobi_measure(int alpha, double q, int truncation);

struct MomentError {
  int n = 0;
  double computed = 0;
  double expected = 0;
  double abs_error = 0;
  double rel_error = 0;
};

struct MeasureReport {
  std::string family;
  double q = 0;
  int truncation = 0;
  double tolerance = 0;
  std::vector<MomentError> moments;
  double max_rel_error = 0;
  bool pass = false;

  nlohmann::json to_json() const;
};

MeasureReport prop1_measure_check(double q, int truncation, int max_n, double tolerance = 1e-9);
MeasureReport qjacobi_measure_check(int alpha, double q, int truncation, int max_n, double tolerance = 1e-9);

}  // namespace octabasic
