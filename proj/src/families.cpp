#include "octabasic/families.hpp"

#include <stdexcept>

#include "octabasic/qseries.hpp"

namespace octabasic {

namespace {

Poly qpow(int e) { return Poly::var(VarId::q, e); }
Poly sym(VarId v) { return Poly::var(v); }

}  // namespace

RecurrenceCoeffs octabasic_coeffs() {
  return {"octabasic",
          [](int n) {
            return sym(VarId::a) * bracket2(n + 1, VarId::r, VarId::s) + sym(VarId::b) * bracket2(n, VarId::t, VarId::u);
          },
          [](int n) {
            return sym(VarId::a) * sym(VarId::b) * bracket2(n, VarId::p, VarId::q) * bracket2(n, VarId::v, VarId::w);
          }};
}

std::string_view spec_family_name(SpecFamily f) {
  switch (f) {
    case SpecFamily::T2:
      return "t2";
    case SpecFamily::T3:
      return "t3";
    case SpecFamily::QL:
      return "ql";
  }
  return "?";
}

namespace {

Specialization bracket_specialization(std::string name, int a_exp) {
  Specialization s{std::move(name), {}};
  for (auto v : {VarId::r, VarId::t, VarId::p, VarId::v}) s.assignments[v] = qpow(2);
  for (auto v : {VarId::s, VarId::u, VarId::q, VarId::w}) s.assignments[v] = qpow(1);
  s.assignments[VarId::a] = qpow(a_exp);
  s.assignments[VarId::b] = qpow(0);
  return s;
}

}  // namespace

Specialization spec_theorem2() { return bracket_specialization("t2", -1); }
Specialization spec_theorem3() { return bracket_specialization("t3", 1); }

Specialization spec_qlaguerre() {
  // Here the pair (p, q) maps to (q^-2, q^-1), so the bracket variable q is
  // sent to q^-1 rather than kept.
  Specialization s{"ql", {}};
  for (auto v : {VarId::r, VarId::t, VarId::p, VarId::v}) s.assignments[v] = qpow(-2);
  for (auto v : {VarId::s, VarId::u, VarId::q, VarId::w}) s.assignments[v] = qpow(-1);
  s.assignments[VarId::a] = qpow(-1);
  s.assignments[VarId::b] = qpow(-2);
  return s;
}

Specialization specialization(SpecFamily f) {
  switch (f) {
    case SpecFamily::T2:
      return spec_theorem2();
    case SpecFamily::T3:
      return spec_theorem3();
    case SpecFamily::QL:
      return spec_qlaguerre();
  }
  throw std::invalid_argument("unknown specialization");
}

RecurrenceCoeffs specialize(const RecurrenceCoeffs& c, const Specialization& s) {
  return {c.name + "/" + s.name,
          [c, map = s.assignments](int n) { return substitute(c.b_of(n), map); },
          [c, map = s.assignments](int n) { return substitute(c.lambda_of(n), map); }};
}

RecurrenceCoeffs qjacobi_coeffs(int alpha) {
  if (alpha < 0) throw std::invalid_argument("qjacobi_coeffs: alpha must be nonnegative");
  return {"qjacobi",
          [alpha](int n) { return qpow(n - 1) * bracket_q(n + 1 + alpha) + qpow(n + alpha - 1) * bracket_q(n); },
          [alpha](int n) { return qpow(2 * n - 3 + alpha) * bracket_q(n) * bracket_q(n + alpha); }};
}

Poly qjacobi_explicit(int n) {
  if (n < 0) throw std::invalid_argument("qjacobi_explicit: negative n");
  Poly p;
  for (int k = 0; k <= n; ++k) {
    const int sign = k % 2 == 0 ? 1 : -1;
    p += qbinomial(n, k) * falling_bracket_product(n, k) * Poly(sign) * Poly::var(VarId::x, n - k) *
         qpow(static_cast<int>(binom2(k - 1)) - 1);
  }
  return p;
}

RecurrenceCoeffs sum2_coeffs() {
  return {"sum2",
          [](int n) { return qpow(n + 1) * bracket_q(n + 1) + qpow(n - 1) * bracket_q(n); },
          [](int n) { return qpow(2 * n - 1) * bracket_q(n) * bracket_q(n); }};
}

Poly sum2_explicit(int n) {
  if (n < 0) throw std::invalid_argument("sum2_explicit: negative n");
  Poly p = Poly::var(VarId::x, n);
  for (int k = 1; k <= n; ++k) {
    const int sign = k % 2 == 0 ? 1 : -1;
    p += qbinomial(n, k) * falling_bracket_product(n, k - 1) * (bracket_q(n - k) + qpow(n)) * Poly(sign) *
         Poly::var(VarId::x, n - k) * qpow(static_cast<int>(binom2(k)));
  }
  return p;
}

RecurrenceCoeffs qlaguerre_coeffs(int alpha) {
  if (alpha < 0) throw std::invalid_argument("qlaguerre_coeffs: alpha must be nonnegative");
  return {"qlaguerre",
          [alpha](int n) {
            return qpow(-2 * n - alpha) * bracket_q(n) + qpow(-2 * n - 1 - alpha) * bracket_q(n + 1 + alpha);
          },
          [alpha](int n) { return qpow(1 - 4 * n - 2 * alpha) * bracket_q(n) * bracket_q(n + alpha); }};
}

Poly qlaguerre_explicit(int n, int alpha) {
  if (n < 0 || alpha < 0) throw std::invalid_argument("qlaguerre_explicit: negative argument");
  Poly p;
  for (int k = 0; k <= n; ++k) {
    const int sign = k % 2 == 0 ? 1 : -1;
    p += qbinomial(n, k) * falling_bracket_product(n + alpha, k) * Poly(sign) * Poly::var(VarId::x, n - k) *
         qpow(k * (k - alpha - 2 * n));
  }
  return p;
}

Poly moment_closed_form(SpecFamily f, int n) {
  if (n < 0) throw std::invalid_argument("moment_closed_form: negative n");
  switch (f) {
    case SpecFamily::T2:
      return qpow(-n) * qfactorial(n);
    case SpecFamily::T3:
      return n == 0 ? Poly(1) : qpow(1) * qfactorial(n);
    case SpecFamily::QL:
      return qpow(-static_cast<int>(binom2(n + 1))) * qfactorial(n);
  }
  throw std::invalid_argument("unknown specialization");
}

Poly qjacobi_rescaled_moment(int alpha, int n) {
  if (alpha < 0 || n < 0) throw std::invalid_argument("qjacobi_rescaled_moment: negative argument");
  Poly p = qpow(-n);
  for (int i = 1; i <= n; ++i) p *= bracket_q(alpha + i);
  return p;
}

}  // namespace octabasic
