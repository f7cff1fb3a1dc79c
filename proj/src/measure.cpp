#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "octabasic/families.hpp"

namespace octabasic {

namespace {

void check_q(double q) {
  if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("measure: q must lie in (0, 1)");
}

MeasureReport compare(std::string family, const DiscreteMeasure& m, int max_n, double tolerance,
                      const std::function<double(int)>& expected) {
  MeasureReport rep{std::move(family), m.q, m.truncation, tolerance, {}, 0.0, true};
  for (int n = 0; n <= max_n; ++n) {
    MomentError e;
    e.n = n;
    e.computed = m.moment(n);
    e.expected = expected(n);
    e.abs_error = std::abs(e.computed - e.expected);
    e.rel_error = e.expected != 0.0 ? e.abs_error / std::abs(e.expected) : e.abs_error;
    rep.max_rel_error = std::max(rep.max_rel_error, e.rel_error);
    rep.moments.push_back(e);
  }
  rep.pass = rep.max_rel_error < tolerance;
  return rep;
}

}  // namespace

double qpochhammer_infinite(double z, double q, int max_factors) {
  double prod = 1.0;
  double term = z;
  for (int k = 0; k < max_factors; ++k) {
    if (std::abs(term) < 1e-16) break;
    prod *= 1.0 - term;
    term *= q;
  }
  return prod;
}

double DiscreteMeasure::moment(int n) const {
  long double sum = 0;
  for (const auto& a : atoms) {
    if (a.location == 0.0) {
      if (n == 0) sum += a.mass;
      continue;
    }
    sum += static_cast<long double>(a.mass) * std::pow(static_cast<long double>(a.location), n);
  }
  return static_cast<double>(sum);
}

DiscreteMeasure prop1_measure(double q, int truncation) {
  check_q(q);
  if (truncation < 1) throw std::invalid_argument("prop1_measure: truncation must be >= 1");
  DiscreteMeasure m{q, truncation, {}};
  const double qq_inf = qpochhammer_infinite(q, q, truncation);
  m.atoms.push_back({0.0, 1.0 - q});
  double qq_prefix = 1.0;  // (q;q)_{i-1}
  for (int i = 1; i <= truncation; ++i) {
    if (i >= 2) qq_prefix *= 1.0 - std::pow(q, i - 1);
    m.atoms.push_back({std::pow(q, i - 1) / (1.0 - q), std::pow(q, i) * qq_inf / qq_prefix});
  }
  return m;
}

DiscreteMeasure qjacobi_measure(int alpha, double q, int truncation) {
  check_q(q);
  if (alpha < 0) throw std::invalid_argument("qjacobi_measure: alpha must be nonnegative");
  if (truncation < 1) throw std::invalid_argument("qjacobi_measure: truncation must be >= 1");
  DiscreteMeasure m{q, truncation, {}};
  const double head = qpochhammer_infinite(std::pow(q, alpha + 1), q, truncation);
  const double scale = q * (1.0 - q);
  double qq_prefix = 1.0;  // (q;q)_i
  for (int i = 0; i < truncation; ++i) {
    if (i >= 1) qq_prefix *= 1.0 - std::pow(q, i);
    m.atoms.push_back({std::pow(q, i) / scale, std::pow(q, (alpha + 1) * i) * head / qq_prefix});
  }
  return m;
}

MeasureReport prop1_measure_check(double q, int truncation, int max_n, double tolerance) {
  const auto m = prop1_measure(q, truncation);
  return compare("prop1", m, max_n, tolerance, [q](int n) {
    return eval_numeric(moment_closed_form(SpecFamily::T3, n), {{VarId::q, q}});
  });
}

MeasureReport qjacobi_measure_check(int alpha, double q, int truncation, int max_n, double tolerance) {
  const auto m = qjacobi_measure(alpha, q, truncation);
  return compare("qjacobi(alpha=" + std::to_string(alpha) + ")", m, max_n, tolerance, [q, alpha](int n) {
    return eval_numeric(qjacobi_rescaled_moment(alpha, n), {{VarId::q, q}});
  });
}

nlohmann::json MeasureReport::to_json() const {
  auto rows = nlohmann::json::array();
  for (const auto& e : moments)
    rows.push_back({{"n", e.n},
                    {"computed", e.computed},
                    {"expected", e.expected},
                    {"abs_error", e.abs_error},
                    {"rel_error", e.rel_error}});
  return {{"family", family},       {"q", q},
          {"truncation", truncation}, {"tolerance", tolerance},
          {"moments", rows},        {"max_rel_error", max_rel_error},
          {"pass", pass}};
}

}  // namespace octabasic
