// AVX2 variants of the word kernels. This TU is compiled with -mavx2; nothing
// here runs unless dispatch selected it after the CPUID check.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <bit>
#include <cstddef>
#include <cstdint>

#include "coprimatch/kernels.hpp"

namespace coprimatch::kernels::avx2 {

namespace {

inline __m256i load(const uint64_t* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

inline void store(uint64_t* p, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

// Per-byte popcount via nibble lookup, then horizontal sums of 8-byte lanes.
inline __m256i popcount_bytes(__m256i v) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low = _mm256_set1_epi8(0x0f);
  __m256i lo = _mm256_and_si256(v, low);
  __m256i hi = _mm256_and_si256(_mm256_srli_epi32(v, 4), low);
  __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
  return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

}  // namespace

void or_acc(uint64_t* dst, const uint64_t* src, std::size_t nwords) {
  std::size_t i = 0;
  for (; i + 4 <= nwords; i += 4) store(dst + i, _mm256_or_si256(load(dst + i), load(src + i)));
  for (; i < nwords; ++i) dst[i] |= src[i];
}

void and_not(uint64_t* dst, const uint64_t* a, const uint64_t* b, std::size_t nwords) {
  std::size_t i = 0;
  // andnot computes ~x & y, so pass b first
  for (; i + 4 <= nwords; i += 4) store(dst + i, _mm256_andnot_si256(load(b + i), load(a + i)));
  for (; i < nwords; ++i) dst[i] = a[i] & ~b[i];
}

void and_words(uint64_t* dst, const uint64_t* a, const uint64_t* b, std::size_t nwords) {
  std::size_t i = 0;
  for (; i + 4 <= nwords; i += 4) store(dst + i, _mm256_and_si256(load(a + i), load(b + i)));
  for (; i < nwords; ++i) dst[i] = a[i] & b[i];
}

void not_words(uint64_t* dst, const uint64_t* src, std::size_t nwords) {
  std::size_t i = 0;
  const __m256i ones = _mm256_set1_epi64x(-1);
  for (; i + 4 <= nwords; i += 4) store(dst + i, _mm256_xor_si256(load(src + i), ones));
  for (; i < nwords; ++i) dst[i] = ~src[i];
}

uint64_t popcount(const uint64_t* w, std::size_t nwords) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= nwords; i += 4) acc = _mm256_add_epi64(acc, popcount_bytes(load(w + i)));
  alignas(32) uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  uint64_t c = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < nwords; ++i) c += static_cast<uint64_t>(std::popcount(w[i]));
  return c;
}

std::size_t max_zero_run(const uint8_t* flags, std::size_t n, std::size_t* start) {
  std::size_t best = 0, best_start = n;
  std::size_t cur = 0;  // zero run length ending just before position i
  std::size_t i = 0;
  const __m256i zero = _mm256_setzero_si256();
  for (; i + 32 <= n; i += 32) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(flags + i));
    uint32_t zmask =
        static_cast<uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(v, zero)));
    if (zmask == 0xFFFFFFFFu) {
      cur += 32;
      if (cur > best) {
        best = cur;
        best_start = i + 32 - cur;
      }
      continue;
    }
    if (zmask == 0) {
      cur = 0;
      continue;
    }
    // Mixed block: walk the maximal 1-bit runs of zmask (zero-byte runs).
    uint64_t m = zmask;
    std::size_t pos = 0;
    while (m != 0) {
      unsigned tz = static_cast<unsigned>(std::countr_zero(m));
      m >>= tz;
      unsigned ones = static_cast<unsigned>(std::countr_one(m));
      m >>= ones;
      std::size_t begin_in_block = pos + tz;
      pos = begin_in_block + ones;
      std::size_t run_begin = i + begin_in_block;
      std::size_t run_len = ones;
      if (begin_in_block == 0 && cur > 0) {
        run_len += cur;
        run_begin = i - cur;
      }
      if (run_len > best) {
        best = run_len;
        best_start = run_begin;
      }
    }
    cur = static_cast<std::size_t>(std::countl_one(zmask));
  }
  for (; i < n; ++i) {
    if (flags[i] == 0) {
      ++cur;
      if (cur > best) {
        best = cur;
        best_start = i + 1 - cur;
      }
    } else {
      cur = 0;
    }
  }
  *start = best_start;
  return best;
}

}  // namespace coprimatch::kernels::avx2

#endif  // x86-64
