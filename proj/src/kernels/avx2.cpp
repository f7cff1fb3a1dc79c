#include <immintrin.h>

#include "octabasic/kernels.hpp"

namespace octabasic::kernels::detail {

void straddle_masks_avx2(const RunBounds& runs, std::span<const std::uint8_t> values,
                         std::span<std::uint32_t> masks) {
  const __m256i lo = _mm256_load_si256(reinterpret_cast<const __m256i*>(runs.lo.data()));
  const __m256i hi = _mm256_load_si256(reinterpret_cast<const __m256i*>(runs.hi.data()));
  for (std::size_t e = 0; e < values.size(); ++e) {
    const __m256i v = _mm256_set1_epi8(static_cast<char>(values[e]));
    const __m256i inside = _mm256_and_si256(_mm256_cmpgt_epi8(v, lo), _mm256_cmpgt_epi8(hi, v));
    masks[e] = static_cast<std::uint32_t>(_mm256_movemask_epi8(inside));
  }
}

void profile_dot_avx2(const ProfileMatrix& matrix, const FeatureVector& features,
                      std::span<std::int32_t> out) {
  for (int p = 0; p < matrix.padded_rows(); p += 8) {
    __m256i acc = _mm256_setzero_si256();
    for (int f = 0; f < kFeatureCount; ++f) {
      if (features[f] == 0) continue;
      const __m256i col = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(matrix.column(f) + p));
      acc = _mm256_add_epi32(acc, _mm256_mullo_epi32(col, _mm256_set1_epi32(features[f])));
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + p), acc);
  }
}

}  // namespace octabasic::kernels::detail
