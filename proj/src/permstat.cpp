#include "octabasic/permstat.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "octabasic/qseries.hpp"

namespace octabasic {

// ------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = size();
  pos_.assign(n + 1, -1);
  for (int i = 0; i < n; ++i) {
    const int v = word_[i];
    if (v < 1 || v > n) throw std::invalid_argument("permutation value out of range: " + std::to_string(v));
    if (pos_[v] != -1) throw std::invalid_argument("repeated permutation value: " + std::to_string(v));
    pos_[v] = i;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> w;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) throw std::invalid_argument("bad permutation token '" + token + "'");
    w.push_back(v);
    token.clear();
  };
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == '|' || ch == ',') {
      flush();
    } else {
      token += ch;
    }
  }
  flush();
  return Permutation(std::move(w));
}

std::string Permutation::to_string(bool bars) const {
  std::ostringstream os;
  for (int i = 0; i < size(); ++i) {
    if (i > 0) os << ((bars && word_[i] < word_[i - 1]) ? " | " : " ");
    os << word_[i];
  }
  return os.str();
}

std::string_view class_name(ElementClass c) {
  switch (c) {
    case ElementClass::opener:
      return "op";
    case ElementClass::closer:
      return "clos";
    case ElementClass::continuator:
      return "cont";
    case ElementClass::singleton:
      return "sing";
  }
  return "?";
}

// ----------------------------------------------------------- decomposition

std::vector<int> RunDecomposition::members(const Permutation& sigma, ElementClass c) const {
  std::vector<int> out;
  for (int v : sigma.word())
    if (class_of_value[v] == c) out.push_back(v);
  return out;
}

RunDecomposition decompose(const Permutation& sigma) {
  RunDecomposition d;
  const int n = sigma.size();
  d.run_of_value.assign(n + 1, -1);
  d.class_of_value.assign(n + 1, ElementClass::singleton);
  int begin = 0;
  for (int i = 1; i <= n; ++i) {
    if (i == n || sigma.at(i) < sigma.at(i - 1)) {
      d.runs.push_back({begin, i});
      begin = i;
    }
  }
  for (int r = 0; r < d.run_count(); ++r) {
    const Run run = d.runs[r];
    for (int i = run.begin; i < run.end; ++i) {
      const int v = sigma.at(i);
      d.run_of_value[v] = r;
      if (run.length() == 1) {
        d.class_of_value[v] = ElementClass::singleton;
      } else if (i == run.begin) {
        d.class_of_value[v] = ElementClass::opener;
      } else if (i == run.end - 1) {
        d.class_of_value[v] = ElementClass::closer;
      } else {
        d.class_of_value[v] = ElementClass::continuator;
      }
    }
  }
  return d;
}

namespace {

bool run_straddles(const Permutation& sigma, const Run& run, int value) {
  // Runs are increasing, so the extremes are the endpoints.
  return sigma.at(run.begin) < value && value < sigma.at(run.end - 1);
}

int count_straddling(const Permutation& sigma, int value, bool left) {
  const auto d = decompose(sigma);
  const int own = d.run_of_value.at(value);
  int count = 0;
  for (int r = 0; r < d.run_count(); ++r) {
    if (left ? r >= own : r <= own) continue;
    if (run_straddles(sigma, d.runs[r], value)) ++count;
  }
  return count;
}

}  // namespace

int lsg(const Permutation& sigma, int value) { return count_straddling(sigma, value, true); }
int rsg(const Permutation& sigma, int value) { return count_straddling(sigma, value, false); }

ClassSums class_sums(const Permutation& sigma) {
  const auto d = decompose(sigma);
  ClassSums s;
  for (int v = 1; v <= sigma.size(); ++v) {
    const int own = d.run_of_value[v];
    int l = 0, r = 0;
    for (int k = 0; k < d.run_count(); ++k) {
      if (k == own || !run_straddles(sigma, d.runs[k], v)) continue;
      (k < own ? l : r) += 1;
    }
    const int c = static_cast<int>(d.class_of_value[v]);
    s.lsg[c] += l;
    s.rsg[c] += r;
    s.lsg_total += l;
    s.rsg_total += r;
  }
  return s;
}

// ----------------------------------------------------------------- profiles

namespace {

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

int parse_int(const std::string& s, std::string_view what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (s.empty() || used != s.size()) throw std::invalid_argument("profile: bad integer for " + std::string(what));
  return v;
}

}  // namespace

StatProfile StatProfile::parse(std::string_view text) {
  StatProfile p;
  const std::string body = strip_spaces(text);
  std::array<bool, 4> seen_class{};
  bool seen_run = false, seen_shift = false;

  std::stringstream ss(body);
  std::string field;
  while (std::getline(ss, field, ';')) {
    if (field.empty()) continue;
    const auto eq = field.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("profile: expected key=value, got '" + field + "'");
    const std::string key = field.substr(0, eq);
    const std::string val = field.substr(eq + 1);

    if (key == "run") {
      if (seen_run) throw std::invalid_argument("profile: duplicate run field");
      seen_run = true;
      if (val == "n-run") {
        p.run_term = RunTerm::n_minus_run;
      } else if (val == "run-1") {
        p.run_term = RunTerm::run_minus_1;
      } else {
        throw std::invalid_argument("profile: run must be n-run or run-1");
      }
      continue;
    }
    if (key == "shift") {
      if (seen_shift) throw std::invalid_argument("profile: duplicate shift field");
      seen_shift = true;
      p.shift = parse_int(val, "shift");
      continue;
    }
    int idx = -1;
    for (auto c : kAllClasses)
      if (class_name(c) == key) idx = static_cast<int>(c);
    if (idx < 0) throw std::invalid_argument("profile: unknown field '" + key + "'");
    if (seen_class[idx]) throw std::invalid_argument("profile: duplicate field '" + key + "'");
    seen_class[idx] = true;
    const auto comma = val.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("profile: " + key + " needs two coefficients");
    p.c_lsg[idx] = parse_int(val.substr(0, comma), key);
    p.c_rsg[idx] = parse_int(val.substr(comma + 1), key);
  }
  if (!seen_run) throw std::invalid_argument("profile: missing run field");
  for (auto c : kAllClasses)
    if (!seen_class[static_cast<int>(c)])
      throw std::invalid_argument("profile: missing field '" + std::string(class_name(c)) + "'");
  return p;
}

std::string StatProfile::to_string() const {
  std::ostringstream os;
  os << "run=" << (run_term == RunTerm::n_minus_run ? "n-run" : "run-1");
  for (auto c : kAllClasses) {
    const int i = static_cast<int>(c);
    os << "; " << class_name(c) << '=' << c_lsg[i] << ',' << c_rsg[i];
  }
  os << "; shift=" << shift;
  return os.str();
}

std::pair<int, int> StatProfile::effective(ElementClass c) const {
  const int i = static_cast<int>(c);
  int delta = 0;
  if (c == ElementClass::opener) delta = shift;
  if (c == ElementClass::closer) delta = -shift;
  return {c_lsg[i] + delta, c_rsg[i] + delta};
}

std::vector<StatProfile> coefficient_variants(RunTerm run_term) {
  std::vector<StatProfile> out;
  for (int bits = 0; bits < 16; ++bits) {
    StatProfile p;
    p.run_term = run_term;
    for (int c = 0; c < 4; ++c) {
      const bool swapped = (bits >> c) & 1;
      p.c_lsg[c] = swapped ? 1 : 2;
      p.c_rsg[c] = swapped ? 2 : 1;
    }
    out.push_back(p);
  }
  return out;
}

int eval_profile(const Permutation& sigma, const StatProfile& prof) {
  const auto sums = class_sums(sigma);
  const int runs = decompose(sigma).run_count();
  int s = prof.run_term == RunTerm::n_minus_run ? sigma.size() - runs : runs - 1;
  for (auto c : kAllClasses) {
    const auto [cl, cr] = prof.effective(c);
    s += cl * sums.lsg_of(c) + cr * sums.rsg_of(c);
  }
  return s;
}

// ------------------------------------------------------------ distributions

QDistribution to_distribution(const Poly& f) {
  QDistribution d;
  for (const auto& t : f.terms()) {
    for (auto v : kAllVars)
      if (v != VarId::q && t.mono.exp(v) != 0)
        throw std::invalid_argument("to_distribution: polynomial is not univariate in q");
    if (t.coeff < 0) throw std::invalid_argument("to_distribution: negative coefficient");
    d[t.mono.exp(VarId::q)] = t.coeff.convert_to<std::uint64_t>();
  }
  return d;
}

Poly to_poly(const QDistribution& d) {
  std::vector<Term> terms;
  for (auto [e, c] : d) terms.push_back({Monomial::var(VarId::q, e), BigInt(c)});
  return Poly::from_terms(std::move(terms));
}

std::string distribution_csv(const QDistribution& d) {
  std::ostringstream os;
  os << "exponent,count\n";
  for (auto [e, c] : d) os << e << ',' << c << '\n';
  return os.str();
}

QDistribution qfactorial_distribution(int n) { return to_distribution(qfactorial(n)); }

// ------------------------------------------------------------------- scans

void PermutationScan::load(std::span<const std::uint8_t> word) {
  n_ = static_cast<int>(word.size());
  if (n_ > kMaxScanSize) throw std::invalid_argument("PermutationScan: permutation too long");
  runs_.clear();
  int begin = 0;
  for (int i = 0; i < n_; ++i) {
    word_[i] = word[i];
    pos_[word[i]] = static_cast<std::uint8_t>(i);
    if (i + 1 == n_ || word[i + 1] < word[i]) {
      const int r = runs_.count;
      run_begin_[r] = static_cast<std::uint8_t>(begin);
      runs_.push(word[begin], word[i]);
      const bool single = begin == i;
      for (int j = begin; j <= i; ++j) {
        run_of_pos_[j] = static_cast<std::uint8_t>(r);
        ElementClass c = ElementClass::continuator;
        if (single) {
          c = ElementClass::singleton;
        } else if (j == begin) {
          c = ElementClass::opener;
        } else if (j == i) {
          c = ElementClass::closer;
        }
        cls_[word[j]] = c;
      }
      begin = i + 1;
    }
  }
  run_begin_[runs_.count] = static_cast<std::uint8_t>(n_);

  kernels::straddle_masks(runs_, std::span<const std::uint8_t>(word_.data(), n_),
                          std::span<std::uint32_t>(mask_.data(), n_));

  features_.fill(0);
  for (int i = 0; i < n_; ++i) {
    const std::uint64_t m = mask_[i];
    const int r = run_of_pos_[i];
    const int l = std::popcount(m & ((std::uint64_t{1} << r) - 1));
    const int rr = std::popcount(m >> (r + 1));
    const int v = word_[i];
    lsg_[v] = static_cast<std::uint8_t>(l);
    rsg_[v] = static_cast<std::uint8_t>(rr);
    const int c = static_cast<int>(cls_[v]);
    features_[2 * c] += l;
    features_[2 * c + 1] += rr;
  }
  features_[8] = n_ - runs_.count;
  features_[9] = runs_.count - 1;
}

kernels::ProfileMatrix profile_matrix(std::span<const StatProfile> profiles) {
  kernels::ProfileMatrix m(static_cast<int>(profiles.size()));
  for (int p = 0; p < static_cast<int>(profiles.size()); ++p) {
    const auto& prof = profiles[p];
    for (auto c : kAllClasses) {
      const auto [cl, cr] = prof.effective(c);
      m.set(p, 2 * static_cast<int>(c), cl);
      m.set(p, 2 * static_cast<int>(c) + 1, cr);
    }
    m.set(p, prof.run_term == RunTerm::n_minus_run ? 8 : 9, 1);
  }
  return m;
}

void for_each_permutation(int n, const std::function<void(std::span<const std::uint8_t>)>& visit) {
  if (n < 0 || n > 255) throw std::invalid_argument("for_each_permutation: bad n");
  std::vector<std::uint8_t> w(n);
  std::iota(w.begin(), w.end(), std::uint8_t{1});
  do {
    visit(w);
  } while (std::next_permutation(w.begin(), w.end()));
}

void DenseTally::add(int exponent, std::uint64_t count) {
  if (counts_.empty()) {
    offset_ = exponent;
    counts_.assign(1, 0);
  }
  if (exponent < offset_) {
    counts_.insert(counts_.begin(), static_cast<std::size_t>(offset_ - exponent), 0);
    offset_ = exponent;
  }
  const auto idx = static_cast<std::size_t>(exponent - offset_);
  if (idx >= counts_.size()) counts_.resize(idx + 1, 0);
  counts_[idx] += count;
}

void DenseTally::merge(const DenseTally& o) {
  for (std::size_t i = 0; i < o.counts_.size(); ++i)
    if (o.counts_[i] != 0) add(o.offset_ + static_cast<int>(i), o.counts_[i]);
}

QDistribution DenseTally::to_distribution() const {
  QDistribution d;
  for (std::size_t i = 0; i < counts_.size(); ++i)
    if (counts_[i] != 0) d[offset_ + static_cast<int>(i)] = counts_[i];
  return d;
}

std::vector<QDistribution> tally_permutations(int n, int outputs, const ScanEvaluator& evaluate,
                                              int workers) {
  if (n < 1) throw std::invalid_argument("tally_permutations: n must be >= 1");
  if (n > PermutationScan::kMaxScanSize) throw std::invalid_argument("tally_permutations: n too large");
  if (workers <= 0) workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  workers = std::min(workers, n);

  // Worker w takes every permutation whose first letter f has f % workers == w.
  auto work = [&](int w, std::vector<DenseTally>& tallies) {
    PermutationScan scan;
    std::vector<std::int32_t> exps(outputs);
    std::vector<std::uint8_t> word(n);
    for (int first = 1; first <= n; ++first) {
      if (first % workers != w) continue;
      word[0] = static_cast<std::uint8_t>(first);
      int k = 1;
      for (int v = 1; v <= n; ++v)
        if (v != first) word[k++] = static_cast<std::uint8_t>(v);
      do {
        scan.load(word);
        evaluate(scan, exps);
        for (int o = 0; o < outputs; ++o) tallies[o].add(exps[o]);
      } while (std::next_permutation(word.begin() + 1, word.end()));
    }
  };

  std::vector<std::vector<DenseTally>> partial(workers, std::vector<DenseTally>(outputs));
  if (workers == 1) {
    work(0, partial[0]);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(work, w, std::ref(partial[w]));
    for (auto& t : threads) t.join();
  }
  std::vector<QDistribution> out;
  for (int o = 0; o < outputs; ++o) {
    DenseTally total;
    for (int w = 0; w < workers; ++w) total.merge(partial[w][o]);
    out.push_back(total.to_distribution());
  }
  return out;
}

std::vector<QDistribution> distributions(int n, std::span<const StatProfile> profiles) {
  const auto matrix = profile_matrix(profiles);
  const int rows = matrix.rows();
  return tally_permutations(n, rows, [&matrix, rows](const PermutationScan& scan, std::span<std::int32_t> exps) {
    thread_local std::vector<std::int32_t> buf;
    buf.resize(matrix.padded_rows());
    kernels::profile_dot(matrix, scan.features(), buf);
    std::copy_n(buf.begin(), rows, exps.begin());
  });
}

QDistribution distribution(int n, const StatProfile& prof) {
  return distributions(n, std::span<const StatProfile>(&prof, 1)).front();
}

// ------------------------------------------------------- ten-variable weights

bool check_identity_35(const Permutation& sigma) {
  const auto s = class_sums(sigma);
  return s.lsg_of(ElementClass::opener) + s.rsg_of(ElementClass::opener) ==
         s.lsg_of(ElementClass::closer) + s.rsg_of(ElementClass::closer);
}

namespace {

Monomial weight_monomial(const ClassSums& s, int n, int runs) {
  Monomial m;
  m.set_exp(VarId::r, s.lsg_of(ElementClass::singleton));
  m.set_exp(VarId::s, s.rsg_of(ElementClass::singleton));
  m.set_exp(VarId::t, s.lsg_of(ElementClass::continuator));
  m.set_exp(VarId::u, s.rsg_of(ElementClass::continuator));
  m.set_exp(VarId::p, s.lsg_of(ElementClass::opener));
  m.set_exp(VarId::q, s.rsg_of(ElementClass::opener));
  m.set_exp(VarId::v, s.lsg_of(ElementClass::closer));
  m.set_exp(VarId::w, s.rsg_of(ElementClass::closer));
  m.set_exp(VarId::a, runs);
  m.set_exp(VarId::b, n - runs);
  return m;
}

}  // namespace

Poly theorem1_weight(const Permutation& sigma) {
  return Poly::monomial(weight_monomial(class_sums(sigma), sigma.size(), decompose(sigma).run_count()));
}

Poly moment_via_permutations(int n) {
  if (n < 0) throw std::invalid_argument("moment_via_permutations: negative n");
  if (n == 0) return Poly(1);
  std::unordered_map<Monomial, std::uint64_t, MonomialHash> acc;
  PermutationScan scan;
  for_each_permutation(n, [&](std::span<const std::uint8_t> w) {
    scan.load(w);
    const auto& f = scan.features();
    ClassSums s;
    for (int c = 0; c < 4; ++c) {
      s.lsg[c] = f[2 * c];
      s.rsg[c] = f[2 * c + 1];
    }
    ++acc[weight_monomial(s, n, scan.run_count())];
  });
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) terms.push_back({m, BigInt(c)});
  return Poly::from_terms(std::move(terms));
}

}  // namespace octabasic
