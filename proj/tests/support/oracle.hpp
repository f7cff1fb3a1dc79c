#pragma once

// Deliberately naive reimplementations used only to cross-check the library.
// Nothing here calls into octabasic except for the Poly container itself.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "octabasic/polyring.hpp"

namespace oracle {

using Word = std::vector<int>;

inline Word parse_word(const char* text) {
  Word w;
  int cur = 0;
  bool in = false;
  for (const char* p = text;; ++p) {
    if (*p >= '0' && *p <= '9') {
      cur = cur * 10 + (*p - '0');
      in = true;
    } else {
      if (in) w.push_back(cur);
      cur = 0;
      in = false;
      if (!*p) break;
    }
  }
  return w;
}

/// Run index for each position.
inline std::vector<int> run_index(const Word& w) {
  std::vector<int> idx(w.size());
  int r = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0 && w[i - 1] > w[i]) ++r;
    idx[i] = r;
  }
  return idx;
}

inline int run_count(const Word& w) { return w.empty() ? 0 : run_index(w).back() + 1; }

/// 0 opener, 1 closer, 2 continuator, 3 singleton for the element at position i.
inline int element_class(const Word& w, std::size_t i) {
  const auto idx = run_index(w);
  const bool first = i == 0 || idx[i - 1] != idx[i];
  const bool last = i + 1 == w.size() || idx[i + 1] != idx[i];
  if (first && last) return 3;
  if (first) return 0;
  if (last) return 1;
  return 2;
}

/// Straddling runs on one side of position i, by scanning every run element.
inline int straddle(const Word& w, std::size_t i, bool left) {
  const auto idx = run_index(w);
  const int own = idx[i];
  const int runs = run_count(w);
  int count = 0;
  for (int r = 0; r < runs; ++r) {
    if (left ? r >= own : r <= own) continue;
    bool below = false, above = false;
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (idx[k] != r) continue;
      below |= w[k] < w[i];
      above |= w[k] > w[i];
    }
    count += below && above;
  }
  return count;
}

struct Sums {
  int lsg[4] = {0, 0, 0, 0};
  int rsg[4] = {0, 0, 0, 0};
};

inline Sums class_sums(const Word& w) {
  Sums s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const int c = element_class(w, i);
    s.lsg[c] += straddle(w, i, true);
    s.rsg[c] += straddle(w, i, false);
  }
  return s;
}

inline int inversions(const Word& w) {
  int inv = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) inv += w[i] > w[j];
  return inv;
}

/// n!_q coefficients as the inversion-number distribution over S_n.
inline std::map<int, std::uint64_t> inversion_distribution(int n) {
  Word w(n);
  std::iota(w.begin(), w.end(), 1);
  std::map<int, std::uint64_t> d;
  do {
    ++d[inversions(w)];
  } while (std::next_permutation(w.begin(), w.end()));
  return d;
}

inline std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

/// 1 + q + ... + q^{n-1} built term by term.
inline octabasic::Poly geometric(int n, octabasic::VarId q = octabasic::VarId::q) {
  octabasic::Poly f;
  for (int i = 0; i < n; ++i) f += octabasic::Poly::var(q, i);
  return f;
}

/// c^{n-1} + c^{n-2} d + ... + d^{n-1}.
inline octabasic::Poly homogeneous(int n, octabasic::VarId c, octabasic::VarId d) {
  octabasic::Poly f;
  for (int i = 0; i < n; ++i) f += octabasic::Poly::var(c, n - 1 - i) * octabasic::Poly::var(d, i);
  return f;
}

inline octabasic::Poly q_factorial(int n) {
  octabasic::Poly f = 1;
  for (int i = 1; i <= n; ++i) f *= geometric(i);
  return f;
}

/// Random sparse Laurent polynomial over a few variables with small coefficients.
inline octabasic::Poly random_poly(std::mt19937& rng, int max_terms = 5, int max_exp = 3, bool laurent = true) {
  using namespace octabasic;
  static constexpr VarId vars[] = {VarId::a, VarId::b, VarId::q, VarId::r};
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> expo(laurent ? -max_exp : 0, max_exp);
  std::uniform_int_distribution<int> coef(-9, 9);
  Poly f;
  const int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    Monomial m;
    for (VarId v : vars) m.set_exp(v, expo(rng));
    f += Poly::monomial(m, coef(rng));
  }
  return f;
}

}  // namespace oracle
