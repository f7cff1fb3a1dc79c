#include "octabasic/polyring.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <sstream>
#include <unordered_map>


namespace octabasic {

namespace {

constexpr std::array<std::string_view, kVarCount> kNames = {
    "a", "b", "r", "s", "t", "u", "p", "q", "v", "w", "x"};

Monomial::Exponent checked_exp(long e) {
  if (e > std::numeric_limits<Monomial::Exponent>::max() ||
      e < std::numeric_limits<Monomial::Exponent>::min())
    throw std::overflow_error("monomial exponent out of range");
  return static_cast<Monomial::Exponent>(e);
}

// Products below this many term pairs are sorted directly; above it they are
// merged in 128-bit arithmetic, or hashed when coefficients are wide.
constexpr std::size_t kHashProductThreshold = 1u << 12;

// With every |coefficient| below 2^40 and fewer than 2^40 pairs, no partial
// sum can leave the range of a 128-bit accumulator.
constexpr unsigned kNarrowCoeffBits = 40;

struct NarrowTerm {
  Monomial mono;
  __int128 coeff;
};

BigInt to_bigint(__int128 c) {
  // cpp_int has no portable 128-bit constructor; assemble from 64-bit halves.
  const bool neg = c < 0;
  const unsigned __int128 mag = neg ? -static_cast<unsigned __int128>(c) : static_cast<unsigned __int128>(c);
  BigInt v = static_cast<std::uint64_t>(mag >> 64);
  v <<= 64;
  v += static_cast<std::uint64_t>(mag);
  return neg ? BigInt(-v) : v;
}

std::vector<NarrowTerm> merge_add(const std::vector<NarrowTerm>& x, const std::vector<NarrowTerm>& y) {
  std::vector<NarrowTerm> r;
  r.reserve(x.size() + y.size());
  auto i = x.begin(), j = y.begin();
  while (i != x.end() && j != y.end()) {
    if (i->mono < j->mono) {
      r.push_back(*i++);
    } else if (j->mono < i->mono) {
      r.push_back(*j++);
    } else {
      const __int128 c = i->coeff + j->coeff;
      if (c != 0) r.push_back({i->mono, c});
      ++i;
      ++j;
    }
  }
  r.insert(r.end(), i, x.end());
  r.insert(r.end(), j, y.end());
  return r;
}

// Product of small[lo, hi) with big. Each single-term product is a sorted
// translate of big, so halves combine by linear merges with sequential access.
std::vector<NarrowTerm> narrow_product(const std::vector<NarrowTerm>& small, std::size_t lo, std::size_t hi,
                                       const std::vector<NarrowTerm>& big) {
  if (hi - lo == 1) {
    std::vector<NarrowTerm> r;
    r.reserve(big.size());
    const NarrowTerm& s = small[lo];
    for (const auto& t : big) r.push_back({s.mono * t.mono, s.coeff * t.coeff});
    return r;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  return merge_add(narrow_product(small, lo, mid, big), narrow_product(small, mid, hi, big));
}

bool narrow_coefficients(const std::vector<Term>& terms) {
  for (const auto& t : terms)
    if (!t.coeff.is_zero() && boost::multiprecision::msb(boost::multiprecision::abs(t.coeff)) >= kNarrowCoeffBits)
      return false;
  return true;
}

}  // namespace

std::string_view var_name(VarId v) { return kNames[static_cast<std::size_t>(v)]; }

std::optional<VarId> parse_var(std::string_view name) {
  for (std::size_t i = 0; i < kVarCount; ++i)
    if (kNames[i] == name) return static_cast<VarId>(i);
  return std::nullopt;
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::initializer_list<std::pair<VarId, int>> exps) {
  for (auto [v, e] : exps) set_exp(v, exp(v) + e);
}

Monomial Monomial::var(VarId v, int e) {
  Monomial m;
  m.set_exp(v, e);
  return m;
}

void Monomial::set_exp(VarId v, int e) { exps_[static_cast<std::size_t>(v)] = checked_exp(e); }

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
}

bool Monomial::has_negative() const {
  return std::any_of(exps_.begin(), exps_.end(), [](auto e) { return e < 0; });
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r = *this;
  r *= o;
  return r;
}

Monomial& Monomial::operator*=(const Monomial& o) {
  // Widen, add and range-check the whole vector at once; this is the inner
  // loop of every polynomial product.
  std::array<std::int32_t, kSlots> sum;
  bool ok = true;
  for (std::size_t i = 0; i < kSlots; ++i) {
    sum[i] = std::int32_t{exps_[i]} + o.exps_[i];
    ok &= sum[i] >= std::numeric_limits<Exponent>::min() && sum[i] <= std::numeric_limits<Exponent>::max();
  }
  if (!ok) throw std::overflow_error("monomial exponent out of range");
  for (std::size_t i = 0; i < kSlots; ++i) exps_[i] = static_cast<Exponent>(sum[i]);
  return *this;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    r.exps_[i] = checked_exp(long{exps_[i]} - o.exps_[i]);
  return r;
}

Monomial Monomial::gcd(const Monomial& x, const Monomial& y) {
  Monomial r;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] = std::min(x.exps_[i], y.exps_[i]);
  return r;
}

bool Monomial::divisible_by(const Monomial& o) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] < o.exps_[i]) return false;
  return true;
}

std::size_t Monomial::hash() const {
  std::array<std::uint64_t, 3> words{};
  static_assert(sizeof(words) == sizeof(exps_));
  std::memcpy(words.data(), exps_.data(), sizeof(words));
  std::uint64_t h = 0x9e3779b97f4a7c15ull;
  for (auto w : words) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdull;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

// -------------------------------------------------------------------- Poly

Poly::Poly(long long c) {
  if (c != 0) terms_.push_back({Monomial{}, BigInt(c)});
}

Poly::Poly(const BigInt& c) {
  if (c != 0) terms_.push_back({Monomial{}, c});
}

Poly Poly::var(VarId v, int e) { return monomial(Monomial::var(v, e)); }

Poly Poly::monomial(const Monomial& m, BigInt c) {
  Poly p;
  if (c != 0) p.terms_.push_back({m, std::move(c)});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return x.mono < y.mono; });
  Poly p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

bool Poly::is_unit_monomial() const {
  return terms_.size() == 1 && (terms_[0].coeff == 1 || terms_[0].coeff == -1);
}

BigInt Poly::coeff(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& k) { return t.mono < k; });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return 0;
}

const Term& Poly::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms_.back();
}

int Poly::max_degree(VarId v) const {
  if (terms_.empty()) return 0;
  int d = std::numeric_limits<int>::min();
  for (const auto& t : terms_) d = std::max(d, t.mono.exp(v));
  return d;
}

int Poly::min_degree(VarId v) const {
  if (terms_.empty()) return 0;
  int d = std::numeric_limits<int>::max();
  for (const auto& t : terms_) d = std::min(d, t.mono.exp(v));
  return d;
}

bool Poly::contains(VarId v) const {
  return std::any_of(terms_.begin(), terms_.end(), [v](const Term& t) { return t.mono.exp(v) != 0; });
}

Poly Poly::coefficient_of(VarId v, int k) const {
  Poly r;
  for (const auto& t : terms_) {
    if (t.mono.exp(v) != k) continue;
    Monomial m = t.mono;
    m.set_exp(v, 0);
    r.terms_.push_back({m, t.coeff});
  }
  // Clearing one coordinate keeps lexicographic order among the selected terms.
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Poly operator+(const Poly& f, const Poly& g) {
  Poly r;
  r.terms_.reserve(f.terms_.size() + g.terms_.size());
  auto i = f.terms_.begin(), ie = f.terms_.end();
  auto j = g.terms_.begin(), je = g.terms_.end();
  while (i != ie && j != je) {
    if (i->mono < j->mono) {
      r.terms_.push_back(*i++);
    } else if (j->mono < i->mono) {
      r.terms_.push_back(*j++);
    } else {
      BigInt c = i->coeff + j->coeff;
      if (c != 0) r.terms_.push_back({i->mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  r.terms_.insert(r.terms_.end(), i, ie);
  r.terms_.insert(r.terms_.end(), j, je);
  return r;
}

Poly operator-(const Poly& f, const Poly& g) { return f + (-g); }

Poly operator*(const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) return {};
  const Poly& small = f.size() <= g.size() ? f : g;
  const Poly& big = f.size() <= g.size() ? g : f;

  if (small.size() == 1) {
    // Translation by a monomial preserves lexicographic order.
    Poly r;
    r.terms_.reserve(big.size());
    const Term& s = small.terms_[0];
    for (const auto& t : big.terms_) r.terms_.push_back({t.mono * s.mono, t.coeff * s.coeff});
    return r;
  }

  const std::size_t pairs = small.size() * big.size();
  if (pairs <= kHashProductThreshold) {
    std::vector<Term> out;
    out.reserve(pairs);
    for (const auto& s : small.terms_)
      for (const auto& t : big.terms_) out.push_back({s.mono * t.mono, s.coeff * t.coeff});
    return Poly::from_terms(std::move(out));
  }

  std::vector<Term> out;
  if (pairs < (std::size_t{1} << kNarrowCoeffBits) && narrow_coefficients(small.terms_) &&
      narrow_coefficients(big.terms_)) {
    std::vector<NarrowTerm> big_narrow;
    big_narrow.reserve(big.size());
    for (const auto& t : big.terms_) big_narrow.push_back({t.mono, t.coeff.convert_to<std::int64_t>()});
    std::vector<NarrowTerm> small_narrow;
    small_narrow.reserve(small.size());
    for (const auto& t : small.terms_) small_narrow.push_back({t.mono, t.coeff.convert_to<std::int64_t>()});
    const auto prod = narrow_product(small_narrow, 0, small_narrow.size(), big_narrow);
    out.reserve(prod.size());
    for (const auto& t : prod) out.push_back({t.mono, to_bigint(t.coeff)});
  } else {
    std::unordered_map<Monomial, BigInt, MonomialHash> acc;
    acc.reserve(big.size() * 2);
    for (const auto& s : small.terms_)
      for (const auto& t : big.terms_) acc[s.mono * t.mono] += s.coeff * t.coeff;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (c != 0) out.push_back({m, std::move(c)});
    std::sort(out.begin(), out.end(), [](const Term& x, const Term& y) { return x.mono < y.mono; });
  }
  Poly r;
  r.terms_ = std::move(out);
  return r;
}

Poly& Poly::operator+=(const Poly& g) { return *this = *this + g; }
Poly& Poly::operator-=(const Poly& g) { return *this = *this - g; }
Poly& Poly::operator*=(const Poly& g) { return *this = *this * g; }

Poly Poly::pow(unsigned e) const {
  Poly result(1);
  Poly base = *this;
  while (e != 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    BigInt c = t.coeff;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;

    std::string factors;
    for (auto v : kAllVars) {
      const int e = t.mono.exp(v);
      if (e == 0) continue;
      if (!factors.empty()) factors += '*';
      factors += var_name(v);
      if (e != 1) factors += '^' + std::to_string(e);
    }
    if (factors.empty()) {
      os << c;
    } else {
      if (c != 1) os << c << '*';
      os << factors;
    }
  }
  return os.str();
}

Poly add(const Poly& f, const Poly& g) { return f + g; }
Poly mul(const Poly& f, const Poly& g) { return f * g; }

// ------------------------------------------------------------ substitution

Poly substitute(const Poly& f, const Substitution& map) {
  if (f.is_zero()) return f;

  bool all_unit = std::all_of(map.begin(), map.end(),
                              [](const auto& kv) { return kv.second.is_unit_monomial(); });
  if (all_unit) {
    std::vector<Term> out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) {
      Monomial m;
      BigInt c = t.coeff;
      for (auto v : kAllVars) {
        const int e = t.mono.exp(v);
        if (e == 0) continue;
        auto it = map.find(v);
        if (it == map.end()) {
          m *= Monomial::var(v, e);
          continue;
        }
        const Term& img = it->second.terms()[0];
        for (auto u : kAllVars) {
          if (int ie = img.mono.exp(u); ie != 0) m *= Monomial::var(u, ie * e);
        }
        if (img.coeff < 0 && (e % 2 != 0)) c = -c;
      }
      out.push_back({m, std::move(c)});
    }
    return Poly::from_terms(std::move(out));
  }

  // General path: expand powers of the images, cached per (variable, exponent).
  std::map<std::pair<VarId, int>, Poly> power_cache;
  auto power_of = [&](VarId v, int e) -> const Poly& {
    auto key = std::make_pair(v, e);
    if (auto it = power_cache.find(key); it != power_cache.end()) return it->second;
    const Poly& img = map.at(v);
    Poly val;
    if (e >= 0) {
      val = img.pow(static_cast<unsigned>(e));
    } else {
      if (!img.is_unit_monomial())
        throw NonInvertibleSubstitution("cannot substitute " + img.to_string() + " for " +
                                        std::string(var_name(v)) + " under a negative exponent");
      const Term& it = img.terms()[0];
      Monomial inv = Monomial{} / it.mono;
      val = Poly::monomial(inv, it.coeff).pow(static_cast<unsigned>(-e));
    }
    return power_cache.emplace(key, std::move(val)).first->second;
  };

  Poly result;
  std::vector<Poly> pieces;
  for (const auto& t : f.terms()) {
    Monomial kept;
    Poly piece(t.coeff);
    for (auto v : kAllVars) {
      const int e = t.mono.exp(v);
      if (e == 0) continue;
      if (map.find(v) == map.end()) {
        kept *= Monomial::var(v, e);
      } else {
        piece *= power_of(v, e);
      }
    }
    pieces.push_back(piece * Poly::monomial(kept));
  }
  // Pairwise reduction keeps the intermediate sums balanced.
  while (pieces.size() > 1) {
    std::vector<Poly> next;
    next.reserve((pieces.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < pieces.size(); i += 2) next.push_back(pieces[i] + pieces[i + 1]);
    if (pieces.size() % 2 == 1) next.push_back(std::move(pieces.back()));
    pieces = std::move(next);
  }
  return pieces.empty() ? Poly{} : pieces.front();
}

// -------------------------------------------------------------- evaluation

double eval_numeric(const Poly& f, const std::map<VarId, double>& values) {
  long double sum = 0;
  for (const auto& t : f.terms()) {
    long double term = t.coeff.convert_to<long double>();
    for (auto v : kAllVars) {
      const int e = t.mono.exp(v);
      if (e == 0) continue;
      auto it = values.find(v);
      if (it == values.end())
        throw std::invalid_argument("no value for variable " + std::string(var_name(v)));
      if (it->second == 0.0 && e < 0)
        throw DivisionByZero("zero value for " + std::string(var_name(v)) + " under a negative exponent");
      term *= std::pow(static_cast<long double>(it->second), e);
    }
    sum += term;
  }
  return static_cast<double>(sum);
}

// ---------------------------------------------------------------- division

namespace {

Monomial min_exponents(const Poly& f) {
  Monomial m = f.terms().front().mono;
  for (const auto& t : f.terms()) m = Monomial::gcd(m, t.mono);
  return m;
}

Poly shift(const Poly& f, const Monomial& m) { return f * Poly::monomial(m); }

}  // namespace

Poly exact_divide(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw DivisionByZero("exact_divide by zero polynomial");
  if (f.is_zero()) return {};

  if (g.is_monomial()) {
    const Term& d = g.terms()[0];
    std::vector<Term> out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) {
      if (t.coeff % d.coeff != 0) throw InexactDivision("coefficient not divisible");
      out.push_back({t.mono / d.mono, t.coeff / d.coeff});
    }
    return Poly::from_terms(std::move(out));
  }

  // Clear monomial content so both sides are ordinary polynomials; a divisor
  // with no monomial factor then yields a polynomial quotient when one exists.
  const Monomial fm = min_exponents(f);
  const Monomial gm = min_exponents(g);
  Poly rem = shift(f, Monomial{} / fm);
  const Poly div = shift(g, Monomial{} / gm);
  const Term& lead = div.leading_term();

  std::vector<Term> quotient;
  while (!rem.is_zero()) {
    const Term& lt = rem.leading_term();
    if (!lt.mono.divisible_by(lead.mono) || lt.coeff % lead.coeff != 0)
      throw InexactDivision(f.to_string() + " is not divisible by " + g.to_string());
    Term qt{lt.mono / lead.mono, lt.coeff / lead.coeff};
    rem -= div * Poly::monomial(qt.mono, qt.coeff);
    quotient.push_back(std::move(qt));
  }
  return shift(Poly::from_terms(std::move(quotient)), fm / gm);
}

}  // namespace octabasic
