#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

#include "octabasic/kernels.hpp"

namespace octabasic::kernels {

namespace {

Isa detect() {
  if (const char* env = std::getenv("OCTABASIC_FORCE_SCALAR"); env && std::strcmp(env, "1") == 0)
    return Isa::scalar;
  return isa_available(Isa::avx2) ? Isa::avx2 : Isa::scalar;
}

std::atomic<Isa>& active_slot() {
  static std::atomic<Isa> slot{detect()};
  return slot;
}

}  // namespace

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(OCTABASIC_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() { return active_slot().load(std::memory_order_relaxed); }

void force_isa(std::optional<Isa> isa) {
  if (isa && !isa_available(*isa))
    throw std::invalid_argument("kernel variant " + std::string(isa_name(*isa)) + " is not available");
  active_slot().store(isa ? *isa : detect(), std::memory_order_relaxed);
}

ProfileMatrix::ProfileMatrix(int rows) : rows_(rows), padded_((rows + 7) / 8 * 8) {
  for (auto& c : cols_) c.assign(padded_, 0);
}

void straddle_masks(const RunBounds& runs, std::span<const std::uint8_t> values,
                    std::span<std::uint32_t> masks, Isa isa) {
  if (masks.size() < values.size()) throw std::invalid_argument("straddle_masks: output too small");
#if defined(OCTABASIC_HAVE_AVX2)
  if (isa == Isa::avx2) return detail::straddle_masks_avx2(runs, values, masks);
#endif
  if (isa != Isa::scalar) throw std::invalid_argument("straddle_masks: variant not built");
  detail::straddle_masks_scalar(runs, values, masks);
}

void straddle_masks(const RunBounds& runs, std::span<const std::uint8_t> values,
                    std::span<std::uint32_t> masks) {
  straddle_masks(runs, values, masks, active_isa());
}

void profile_dot(const ProfileMatrix& matrix, const FeatureVector& features,
                 std::span<std::int32_t> out, Isa isa) {
  if (static_cast<int>(out.size()) < matrix.padded_rows())
    throw std::invalid_argument("profile_dot: output too small");
#if defined(OCTABASIC_HAVE_AVX2)
  if (isa == Isa::avx2) return detail::profile_dot_avx2(matrix, features, out);
#endif
  if (isa != Isa::scalar) throw std::invalid_argument("profile_dot: variant not built");
  detail::profile_dot_scalar(matrix, features, out);
}

void profile_dot(const ProfileMatrix& matrix, const FeatureVector& features,
                 std::span<std::int32_t> out) {
  profile_dot(matrix, features, out, active_isa());
}

}  // namespace octabasic::kernels
