// Built with -mavx2; only reached through the runtime check in truth_table.cpp.

#include <immintrin.h>

#include "etr/truth_table.hpp"

namespace etr::tt::detail {

namespace {

inline __m256i SatisfiesAvx2(__m256i assignment, const Dnf& f) {
  const __m256i zero = _mm256_setzero_si256();
  __m256i any = zero;
  for (const Term& t : f) {
    const __m256i pos = _mm256_set1_epi32(static_cast<int>(t.pos));
    const __m256i neg = _mm256_set1_epi32(static_cast<int>(t.neg));
    const __m256i has_pos = _mm256_cmpeq_epi32(_mm256_and_si256(assignment, pos), pos);
    const __m256i no_neg = _mm256_cmpeq_epi32(_mm256_and_si256(assignment, neg), zero);
    any = _mm256_or_si256(any, _mm256_and_si256(has_pos, no_neg));
  }
  return any;
}

inline unsigned LaneCount(__m256i mask) {
  return static_cast<unsigned>(__builtin_popcount(
      static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(mask)))));
}

}  // namespace

Counts CountAvx2(const Problem& p) {
  const std::uint64_t total = std::uint64_t{1} << p.atom_count;
  if (total < 8) return CountScalar(p);

  Counts c;
  const __m256i ones = _mm256_set1_epi32(-1);
  const __m256i step = _mm256_set1_epi32(8);
  __m256i assignment = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  for (std::uint64_t base = 0; base < total; base += 8) {
    __m256i all = ones;
    for (const Dnf& f : p.premises) {
      all = _mm256_and_si256(all, SatisfiesAvx2(assignment, f));
      if (_mm256_testz_si256(all, all)) break;
    }
    if (!_mm256_testz_si256(all, all)) {
      c.models += LaneCount(all);
      const __m256i concl = SatisfiesAvx2(assignment, p.conclusion);
      c.countermodels += LaneCount(_mm256_andnot_si256(concl, all));
    }
    assignment = _mm256_add_epi32(assignment, step);
  }
  return c;
}

}  // namespace etr::tt::detail
