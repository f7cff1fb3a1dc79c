#pragma once

// Exact sparse Laurent polynomials with arbitrary-precision integer
// coefficients over the fixed variable set {a,b,r,s,t,u,p,q,v,w,x}.

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace octabasic {

using BigInt = boost::multiprecision::cpp_int;

enum class VarId : std::uint8_t { a, b, r, s, t, u, p, q, v, w, x };

inline constexpr std::size_t kVarCount = 11;

inline constexpr std::array<VarId, kVarCount> kAllVars = {
    VarId::a, VarId::b, VarId::r, VarId::s, VarId::t, VarId::u,
    VarId::p, VarId::q, VarId::v, VarId::w, VarId::x};

std::string_view var_name(VarId v);
std::optional<VarId> parse_var(std::string_view name);

struct NonInvertibleSubstitution : std::domain_error {
  using std::domain_error::domain_error;
};
struct InexactDivision : std::domain_error {
  using std::domain_error::domain_error;
};
struct DivisionByZero : std::domain_error {
  using std::domain_error::domain_error;
};

/// Exponent vector of a Laurent monomial. Ordered lexicographically in
/// canonical variable order; the padding slot is always zero.
class Monomial {
 public:
  using Exponent = std::int16_t;

  Monomial() = default;
  Monomial(std::initializer_list<std::pair<VarId, int>> exps);

  static Monomial var(VarId v, int e = 1);

  int exp(VarId v) const { return exps_[static_cast<std::size_t>(v)]; }
  void set_exp(VarId v, int e);

  bool is_one() const;
  bool has_negative() const;

  Monomial operator*(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;
  Monomial& operator*=(const Monomial& o);

  // Componentwise min / max.
  static Monomial gcd(const Monomial& x, const Monomial& y);
  // Exponents of *this dominate o componentwise.
  bool divisible_by(const Monomial& o) const;

  auto operator<=>(const Monomial& o) const = default;
  bool operator==(const Monomial& o) const = default;

  std::size_t hash() const;

 private:
  static constexpr std::size_t kSlots = 12;  // kVarCount rounded up to three 64-bit words
  std::array<Exponent, kSlots> exps_{};
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

struct Term {
  Monomial mono;
  BigInt coeff;

  bool operator==(const Term&) const = default;
};

class Poly;
using Substitution = std::map<VarId, Poly>;

/// Canonical sparse polynomial: terms sorted ascending by monomial, no zero
/// coefficients. Values are immutable in practice; all operations return
/// fresh polynomials.
class Poly {
 public:
  Poly() = default;
  Poly(long long c);  // NOLINT(google-explicit-constructor)
  explicit Poly(const BigInt& c);

  static Poly var(VarId v, int e = 1);
  static Poly monomial(const Monomial& m, BigInt c = 1);
  // Builds from unsorted terms, combining duplicates and dropping zeros.
  static Poly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  // Single term with coefficient +1 or -1.
  bool is_unit_monomial() const;

  BigInt coeff(const Monomial& m) const;
  // Greatest term in canonical order. Requires nonzero.
  const Term& leading_term() const;

  // Degree range in one variable; {0,0} for the zero polynomial.
  int max_degree(VarId v) const;
  int min_degree(VarId v) const;
  bool contains(VarId v) const;

  // Coefficient of v^k as a polynomial free of v.
  Poly coefficient_of(VarId v, int k) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& f, const Poly& g);
  friend Poly operator-(const Poly& f, const Poly& g);
  friend Poly operator*(const Poly& f, const Poly& g);
  Poly& operator+=(const Poly& g);
  Poly& operator-=(const Poly& g);
  Poly& operator*=(const Poly& g);

  Poly pow(unsigned e) const;

  bool operator==(const Poly& g) const = default;

  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

Poly add(const Poly& f, const Poly& g);
Poly mul(const Poly& f, const Poly& g);

/// Simultaneous substitution. Variables absent from the map are kept.
/// Throws NonInvertibleSubstitution when a variable with a negative exponent
/// maps to anything other than a +-1 monomial.
Poly substitute(const Poly& f, const Substitution& map);

/// Numeric evaluation. Every variable present in f must be mapped.
/// Throws DivisionByZero for a zero base under a negative exponent.
double eval_numeric(const Poly& f, const std::map<VarId, double>& values);

/// Returns h with f == g*h. Throws InexactDivision when no such h exists in
/// the integer Laurent ring, std::invalid_argument when g is zero.
Poly exact_divide(const Poly& f, const Poly& g);

}  // namespace octabasic
