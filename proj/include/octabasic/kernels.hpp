#pragma once

// Data-parallel inner loops of the permutation-statistic enumeration.
// Every kernel has a scalar reference; vector variants are picked at runtime
// and must agree with the reference bit for bit.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace octabasic::kernels {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);
bool isa_available(Isa isa);

/// The variant used by the untagged entry points. Defaults to the best
/// available; OCTABASIC_FORCE_SCALAR=1 in the environment pins scalar.
Isa active_isa();
/// Overrides the active variant (nullopt restores auto-detection). Throws
/// std::invalid_argument if the requested variant is unavailable.
void force_isa(std::optional<Isa> isa);

inline constexpr int kMaxRuns = 32;

/// Minimum and maximum of each run, padded so unused lanes never straddle.
struct RunBounds {
  alignas(32) std::array<std::int8_t, kMaxRuns> lo;
  alignas(32) std::array<std::int8_t, kMaxRuns> hi;
  int count = 0;

  RunBounds() { clear(); }
  void clear() {
    lo.fill(INT8_MAX);
    hi.fill(INT8_MIN);
    count = 0;
  }
  void push(int min_value, int max_value) {
    lo[count] = static_cast<std::int8_t>(min_value);
    hi[count] = static_cast<std::int8_t>(max_value);
    ++count;
  }
};

/// masks[e] has bit R set iff lo[R] < values[e] < hi[R]. Values must lie in
/// [1, 127].
void straddle_masks(const RunBounds& runs, std::span<const std::uint8_t> values,
                    std::span<std::uint32_t> masks, Isa isa);
void straddle_masks(const RunBounds& runs, std::span<const std::uint8_t> values,
                    std::span<std::uint32_t> masks);

inline constexpr int kFeatureCount = 10;
using FeatureVector = std::array<std::int32_t, kFeatureCount>;

/// Column-major coefficient table for a batch of linear statistics, padded to
/// a multiple of 8 rows.
class ProfileMatrix {
 public:
  explicit ProfileMatrix(int rows);
  int rows() const { return rows_; }
  int padded_rows() const { return padded_; }
  void set(int row, int feature, std::int32_t value) { cols_[feature][row] = value; }
  std::int32_t get(int row, int feature) const { return cols_[feature][row]; }
  const std::int32_t* column(int feature) const { return cols_[feature].data(); }

 private:
  int rows_;
  int padded_;
  std::array<std::vector<std::int32_t>, kFeatureCount> cols_;
};

/// out[p] = sum_f matrix(p, f) * features[f] for every row p; out must hold
/// padded_rows() entries.
void profile_dot(const ProfileMatrix& matrix, const FeatureVector& features,
                 std::span<std::int32_t> out, Isa isa);
void profile_dot(const ProfileMatrix& matrix, const FeatureVector& features,
                 std::span<std::int32_t> out);

namespace detail {
void straddle_masks_scalar(const RunBounds&, std::span<const std::uint8_t>, std::span<std::uint32_t>);
void profile_dot_scalar(const ProfileMatrix&, const FeatureVector&, std::span<std::int32_t>);
#if defined(OCTABASIC_HAVE_AVX2)
void straddle_masks_avx2(const RunBounds&, std::span<const std::uint8_t>, std::span<std::uint32_t>);
void profile_dot_avx2(const ProfileMatrix&, const FeatureVector&, std::span<std::int32_t>);
#endif
}  // namespace detail

}  // namespace octabasic::kernels
