#include "octabasic/oddfamily.hpp"

#include <bit>
#include <stdexcept>

#include "octabasic/qseries.hpp"

namespace octabasic {

namespace {

Poly sym(VarId v) { return Poly::var(v); }

}  // namespace

// ------------------------------------------------------------------- chain

Poly SymmetricChain::lambda_even_of(int n) const { return sym(VarId::b) * bracket2(n, VarId::t, VarId::u); }
Poly SymmetricChain::lambda_odd_of(int n) const { return sym(VarId::a) * bracket2(n + 1, VarId::r, VarId::s); }

Poly SymmetricChain::lambda_of(int m) const {
  if (m < 1) throw std::invalid_argument("SymmetricChain: lambda_m needs m >= 1");
  return m % 2 == 0 ? lambda_even_of(m / 2) : lambda_odd_of(m / 2);
}

RecurrenceCoeffs SymmetricChain::coeffs() const {
  return {"chain", [](int) { return Poly{}; }, [chain = *this](int m) { return chain.lambda_of(m); }};
}

Substitution chain_identification() {
  return {{VarId::p, sym(VarId::r)}, {VarId::q, sym(VarId::s)}, {VarId::v, sym(VarId::t)}, {VarId::w, sym(VarId::u)}};
}

RecurrenceCoeffs even_coeffs(const SymmetricChain& chain) {
  return {"even",
          [chain](int n) { return (n >= 1 ? chain.lambda_even_of(n) : Poly{}) + chain.lambda_odd_of(n); },
          [chain](int n) { return chain.lambda_of(2 * n - 1) * chain.lambda_of(2 * n); }};
}

RecurrenceCoeffs odd_coeffs(const SymmetricChain& chain) {
  return {"odd",
          [chain](int n) { return chain.lambda_of(2 * n + 1) + chain.lambda_of(2 * n + 2); },
          [chain](int n) { return chain.lambda_of(2 * n) * chain.lambda_of(2 * n + 1); }};
}

MomentSequence odd_moments(const SymmetricChain& chain, int N) {
  return moments_from_recurrence(odd_coeffs(chain), N);
}

bool odd_quotient_relation(const SymmetricChain& chain, int N) {
  const auto odd = odd_moments(chain, N);
  const auto even = moments_from_recurrence(even_coeffs(chain), N + 1);
  for (int n = 0; n <= N; ++n) {
    try {
      if (exact_divide(even[n + 1], even[1]) != odd[n]) return false;
    } catch (const InexactDivision&) {
      return false;
    }
  }
  return true;
}

Poly odd_moment_closed_form(int which, int n) {
  if (n < 0) throw std::invalid_argument("odd_moment_closed_form: negative n");
  const Poly f = qfactorial(n + 1);
  switch (which) {
    case 1:
      return Poly::var(VarId::q, -n) * f;
    case 2:
      return f;
    case 3:
      return Poly::var(VarId::q, -(n * n + 3 * n) / 2) * f;
    default:
      throw std::invalid_argument("odd family must be 1, 2 or 3");
  }
}

SpecFamily odd_family_specialization(int which) {
  switch (which) {
    case 1:
      return SpecFamily::T2;
    case 2:
      return SpecFamily::T3;
    case 3:
      return SpecFamily::QL;
    default:
      throw std::invalid_argument("odd family must be 1, 2 or 3");
  }
}

bool odd_specialization_check(int which, int N) {
  const auto spec = specialization(odd_family_specialization(which));
  const auto mu = moments_from_recurrence(specialize(odd_coeffs(SymmetricChain{}), spec), N);
  for (int n = 0; n <= N; ++n)
    if (mu[n] != odd_moment_closed_form(which, n)) return false;
  return true;
}

// --------------------------------------------------------- starred statistics

AuxStatContext aux_stat(const Permutation& sigma) {
  if (sigma.size() == 0) throw std::invalid_argument("aux_stat: empty permutation");
  const auto dec = decompose(sigma);
  const Run one = dec.runs[dec.run_of_value[1]];
  AuxStatContext ctx;
  ctx.d = sigma.at(one.end - 1);

  int running_min = sigma.size() + 1;
  for (int i = one.end; i < sigma.size(); ++i) {
    const int v = sigma.at(i);
    if (v >= running_min) continue;
    running_min = v;
    if (dec.class_of_value[v] == ElementClass::singleton) ctx.c = v;
  }
  if (!ctx.c) return ctx;
  for (int i = 0; i < one.begin; ++i) {
    const int v = sigma.at(i);
    if (*ctx.c < v && v < ctx.d) ++ctx.nleft;
  }
  ctx.n_of_sigma = 2 * (ctx.d - *ctx.c) - ctx.nleft;
  return ctx;
}

namespace {

int count_star(const Permutation& sigma, int value, bool left) {
  const auto dec = decompose(sigma);
  const int own = dec.run_of_value.at(value);
  const int one = dec.run_of_value[1];
  const auto cls = dec.class_of_value[value];
  const bool is_max_class = cls == ElementClass::closer || cls == ElementClass::singleton;
  int count = 0;
  for (int r = 0; r < dec.run_count(); ++r) {
    if (left ? r >= own : r <= own) continue;
    bool counted = sigma.at(dec.runs[r].begin) < value && value < sigma.at(dec.runs[r].end - 1);
    if (r == one && own != one) counted = !is_max_class;
    if (counted) ++count;
  }
  return count;
}

}  // namespace

int lsg_star(const Permutation& sigma, int value) { return count_star(sigma, value, true); }
int rsg_star(const Permutation& sigma, int value) { return count_star(sigma, value, false); }

StarSums star_sums(const Permutation& sigma) {
  StarSums s;
  for (int v = 1; v <= sigma.size(); ++v) {
    s.lsg += lsg_star(sigma, v);
    s.rsg += rsg_star(sigma, v);
  }
  return s;
}

int theorem4_statistic(const Permutation& sigma, RunTerm run_term) {
  const int runs = decompose(sigma).run_count();
  const auto s = star_sums(sigma);
  const int base = run_term == RunTerm::run_minus_1 ? runs - 1 : sigma.size() - runs;
  return base + 2 * s.lsg + s.rsg + aux_stat(sigma).n_of_sigma;
}

std::array<int, 2> theorem4_statistics(const PermutationScan& scan) {
  const int n = scan.size();
  const int one = scan.run_of_value(1);
  const std::uint32_t one_bit = std::uint32_t{1} << one;

  int star = 0;  // 2 lsg* + rsg*
  for (int v = 1; v <= n; ++v) {
    const int own = scan.run_of_value(v);
    std::uint64_t mask = scan.straddle_mask(v);
    if (own != one) {
      const auto cls = scan.class_of(v);
      if (cls == ElementClass::closer || cls == ElementClass::singleton) {
        mask &= ~std::uint64_t{one_bit};
      } else {
        mask |= one_bit;
      }
    }
    star += 2 * std::popcount(mask & ((std::uint64_t{1} << own) - 1)) + std::popcount(mask >> (own + 1));
  }

  const int d = scan.run_max(one);
  int c = 0;
  int running_min = n + 1;
  for (int pos = scan.run_end(one); pos < n; ++pos) {
    const int v = scan.value_at(pos);
    if (v >= running_min) continue;
    running_min = v;
    if (scan.class_of(v) == ElementClass::singleton) c = v;
  }
  int aux = 0;
  if (c != 0) {
    int nleft = 0;
    for (int pos = 0; pos < scan.run_begin(one); ++pos) {
      const int v = scan.value_at(pos);
      if (c < v && v < d) ++nleft;
    }
    aux = 2 * (d - c) - nleft;
  }
  const int runs = scan.run_count();
  return {n - runs + star + aux, runs - 1 + star + aux};
}

std::array<QDistribution, 2> theorem4_distributions(int n) {
  auto d = tally_permutations(n, 2, [](const PermutationScan& scan, std::span<std::int32_t> exps) {
    const auto s = theorem4_statistics(scan);
    exps[0] = s[0];
    exps[1] = s[1];
  });
  return {std::move(d[0]), std::move(d[1])};
}

QDistribution theorem4_distribution(int n, RunTerm run_term) {
  return theorem4_distributions(n)[static_cast<int>(run_term)];
}

bool restricted_predicate(const Permutation& sigma) {
  const int top = sigma.size();
  if (top == 0) return false;
  const auto dec = decompose(sigma);
  const int one = dec.run_of_value[1];
  if (dec.run_of_value[top] != one) return false;
  int running_min = top + 1;
  for (int i = dec.runs[one].end; i < top; ++i) {
    const int v = sigma.at(i);
    if (v >= running_min) continue;
    running_min = v;
    if (dec.class_of_value[v] == ElementClass::singleton) return false;
  }
  return true;
}

std::uint64_t restricted_count(int n) {
  if (n < 1) throw std::invalid_argument("restricted_count: n must be >= 1");
  std::uint64_t count = 0;
  std::vector<int> buf(n + 1);
  for_each_permutation(n + 1, [&](std::span<const std::uint8_t> w) {
    for (int i = 0; i <= n; ++i) buf[i] = w[i];
    if (restricted_predicate(Permutation(buf))) ++count;
  });
  return count;
}

}  // namespace octabasic
