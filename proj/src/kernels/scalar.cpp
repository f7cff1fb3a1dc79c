#include "octabasic/kernels.hpp"

namespace octabasic::kernels::detail {

void straddle_masks_scalar(const RunBounds& runs, std::span<const std::uint8_t> values,
                           std::span<std::uint32_t> masks) {
  for (std::size_t e = 0; e < values.size(); ++e) {
    const int v = values[e];
    std::uint32_t m = 0;
    for (int r = 0; r < runs.count; ++r)
      if (runs.lo[r] < v && v < runs.hi[r]) m |= std::uint32_t{1} << r;
    masks[e] = m;
  }
}

void profile_dot_scalar(const ProfileMatrix& matrix, const FeatureVector& features,
                        std::span<std::int32_t> out) {
  for (int p = 0; p < matrix.padded_rows(); ++p) {
    std::int32_t acc = 0;
    for (int f = 0; f < kFeatureCount; ++f) acc += matrix.column(f)[p] * features[f];
    out[p] = acc;
  }
}

}  // namespace octabasic::kernels::detail
