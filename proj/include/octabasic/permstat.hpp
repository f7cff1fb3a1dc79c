#pragma once

// Permutations, their increasing runs, the lsg/rsg straddle statistics and
// the Mahonian profile family built from them.

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "octabasic/kernels.hpp"
#include "octabasic/polyring.hpp"

namespace octabasic {

/// One-line notation sigma(1)..sigma(n) of a permutation of {1..n}.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless word is a bijection on {1..n}.
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);
  /// Space-separated values; '|' run bars are accepted and ignored.
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(word_.size()); }
  /// Value at 0-based position.
  int at(int pos) const { return word_[pos]; }
  /// 0-based position of value.
  int position_of(int value) const { return pos_[value]; }
  std::span<const int> word() const { return word_; }

  /// Values separated by spaces, with " | " at descents when bars is set.
  std::string to_string(bool bars = false) const;

  bool operator==(const Permutation& o) const { return word_ == o.word_; }

 private:
  std::vector<int> word_;
  std::vector<int> pos_;  // indexed by value, pos_[0] unused
};

enum class ElementClass : std::uint8_t { opener = 0, closer = 1, continuator = 2, singleton = 3 };

inline constexpr std::array<ElementClass, 4> kAllClasses = {
    ElementClass::opener, ElementClass::closer, ElementClass::continuator, ElementClass::singleton};

std::string_view class_name(ElementClass c);

/// Half-open position range of one maximal increasing run.
struct Run {
  int begin = 0;
  int end = 0;
  int length() const { return end - begin; }
};

struct RunDecomposition {
  std::vector<Run> runs;
  std::vector<int> run_of_value;                // indexed by value
  std::vector<ElementClass> class_of_value;     // indexed by value

  int run_count() const { return static_cast<int>(runs.size()); }
  /// Values of the given class in word order.
  std::vector<int> members(const Permutation& sigma, ElementClass c) const;
};

RunDecomposition decompose(const Permutation& sigma);

/// Runs entirely left (right) of value's position with an element below and an
/// element above value.
int lsg(const Permutation& sigma, int value);
int rsg(const Permutation& sigma, int value);

struct ClassSums {
  std::array<int, 4> lsg{};  // indexed by ElementClass
  std::array<int, 4> rsg{};
  int lsg_total = 0;
  int rsg_total = 0;

  int lsg_of(ElementClass c) const { return lsg[static_cast<int>(c)]; }
  int rsg_of(ElementClass c) const { return rsg[static_cast<int>(c)]; }
  bool operator==(const ClassSums&) const = default;
};

ClassSums class_sums(const Permutation& sigma);

enum class RunTerm : std::uint8_t { n_minus_run, run_minus_1 };

/// A linear statistic: run term + sum over classes of c_lsg*lsg + c_rsg*rsg,
/// with the shift added to both opener coefficients and subtracted from both
/// closer coefficients.
struct StatProfile {
  RunTerm run_term = RunTerm::n_minus_run;
  std::array<int, 4> c_lsg{2, 2, 2, 2};  // indexed by ElementClass
  std::array<int, 4> c_rsg{1, 1, 1, 1};
  int shift = 0;

  static StatProfile theorem2() { return {}; }
  static StatProfile theorem3() {
    StatProfile p;
    p.run_term = RunTerm::run_minus_1;
    return p;
  }

  /// Grammar: "run=n-run|run-1; op=A,B; clos=A,B; cont=A,B; sing=A,B; shift=C"
  /// with whitespace ignored, fields in any order, shift optional.
  static StatProfile parse(std::string_view text);
  std::string to_string() const;

  /// Effective (lsg, rsg) coefficients for a class, shift applied.
  std::pair<int, int> effective(ElementClass c) const;

  bool operator==(const StatProfile&) const = default;
};

/// The 16 profiles choosing (2,1) or (1,2) independently per class.
std::vector<StatProfile> coefficient_variants(RunTerm run_term);

int eval_profile(const Permutation& sigma, const StatProfile& prof);

/// Exponent -> number of permutations.
using QDistribution = std::map<int, std::uint64_t>;

/// Coefficients of a univariate Laurent polynomial in q. Throws
/// std::invalid_argument for other variables or negative coefficients.
QDistribution to_distribution(const Poly& f);
Poly to_poly(const QDistribution& d);
std::string distribution_csv(const QDistribution& d);

/// Fixed-capacity scan of one permutation (n <= kMaxScanSize): runs, classes
/// and per-element straddle statistics computed with the active kernels.
class PermutationScan {
 public:
  static constexpr int kMaxScanSize = kernels::kMaxRuns;

  /// word holds the values 1..n in one-line order.
  void load(std::span<const std::uint8_t> word);

  int size() const { return n_; }
  int run_count() const { return runs_.count; }
  int value_at(int pos) const { return word_[pos]; }
  int position_of(int value) const { return pos_[value]; }
  int run_of_value(int value) const { return run_of_pos_[pos_[value]]; }
  int run_begin(int r) const { return run_begin_[r]; }
  int run_end(int r) const { return run_begin_[r + 1]; }
  int run_min(int r) const { return runs_.lo[r]; }
  int run_max(int r) const { return runs_.hi[r]; }
  ElementClass class_of(int value) const { return cls_[value]; }
  /// Bit R set iff run R contains values below and above value.
  std::uint32_t straddle_mask(int value) const { return mask_[pos_[value]]; }
  int lsg(int value) const { return lsg_[value]; }
  int rsg(int value) const { return rsg_[value]; }
  const kernels::FeatureVector& features() const { return features_; }

 private:
  int n_ = 0;
  std::array<std::uint8_t, kMaxScanSize> word_{};
  std::array<std::uint8_t, kMaxScanSize + 1> pos_{};
  std::array<std::uint8_t, kMaxScanSize> run_of_pos_{};
  std::array<std::uint8_t, kMaxScanSize + 1> run_begin_{};
  std::array<ElementClass, kMaxScanSize + 1> cls_{};
  std::array<std::uint32_t, kMaxScanSize> mask_{};
  std::array<std::uint8_t, kMaxScanSize + 1> lsg_{};
  std::array<std::uint8_t, kMaxScanSize + 1> rsg_{};
  kernels::RunBounds runs_;
  kernels::FeatureVector features_{};
};

/// Feature layout consumed by profile_dot: lsg/rsg sums per class in
/// ElementClass order, then n - run, then run - 1.
kernels::ProfileMatrix profile_matrix(std::span<const StatProfile> profiles);

/// Calls visit on every permutation of {1..n} in lexicographic order.
void for_each_permutation(int n, const std::function<void(std::span<const std::uint8_t>)>& visit);

/// Integer histogram keyed by exponent, growable in both directions.
class DenseTally {
 public:
  void add(int exponent, std::uint64_t count = 1);
  void merge(const DenseTally& o);
  QDistribution to_distribution() const;

 private:
  int offset_ = 0;  // exponent of counts_[0]
  std::vector<std::uint64_t> counts_;
};

/// Runs one scanner per worker over S_n split by first letter and tallies
/// `outputs` statistics. evaluate(scan, exps) writes one exponent per output.
/// The result does not depend on the worker count.
using ScanEvaluator = std::function<void(const PermutationScan&, std::span<std::int32_t>)>;
std::vector<QDistribution> tally_permutations(int n, int outputs, const ScanEvaluator& evaluate,
                                              int workers = 0);

QDistribution distribution(int n, const StatProfile& prof);
std::vector<QDistribution> distributions(int n, std::span<const StatProfile> profiles);

/// Coefficients of n!_q.
QDistribution qfactorial_distribution(int n);

/// lsg(op)+rsg(op) == lsg(clos)+rsg(clos).
bool check_identity_35(const Permutation& sigma);

/// The ten-variable monomial
/// r^lsg(sing) s^rsg(sing) t^lsg(cont) u^rsg(cont) p^lsg(op) q^rsg(op)
/// v^lsg(clos) w^rsg(clos) a^run b^(n-run).
Poly theorem1_weight(const Permutation& sigma);

/// Sum of theorem1_weight over S_n (1 for n = 0).
Poly moment_via_permutations(int n);

}  // namespace octabasic
