#include "coprimatch/kernels.hpp"

#include <atomic>
#include <bit>
#include <cstdlib>

namespace coprimatch::kernels {

namespace scalar {

void or_acc(uint64_t* dst, const uint64_t* src, std::size_t nwords) {
  for (std::size_t i = 0; i < nwords; ++i) dst[i] |= src[i];
}

void and_not(uint64_t* dst, const uint64_t* a, const uint64_t* b, std::size_t nwords) {
  for (std::size_t i = 0; i < nwords; ++i) dst[i] = a[i] & ~b[i];
}

void and_words(uint64_t* dst, const uint64_t* a, const uint64_t* b, std::size_t nwords) {
  for (std::size_t i = 0; i < nwords; ++i) dst[i] = a[i] & b[i];
}

void not_words(uint64_t* dst, const uint64_t* src, std::size_t nwords) {
  for (std::size_t i = 0; i < nwords; ++i) dst[i] = ~src[i];
}

uint64_t popcount(const uint64_t* w, std::size_t nwords) {
  uint64_t c = 0;
  for (std::size_t i = 0; i < nwords; ++i) c += static_cast<uint64_t>(std::popcount(w[i]));
  return c;
}

std::size_t max_zero_run(const uint8_t* flags, std::size_t n, std::size_t* start) {
  std::size_t best = 0, best_start = n;
  std::size_t cur = 0;
  for (std::size_t i = 0; i < n; ++i) {
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

}  // namespace scalar

namespace {

Ops make_scalar() {
  return Ops{scalar::or_acc, scalar::and_not, scalar::and_words,
             scalar::not_words, scalar::popcount, scalar::max_zero_run};
}

#if defined(__x86_64__) || defined(_M_X64)
Ops make_avx2() {
  return Ops{avx2::or_acc, avx2::and_not, avx2::and_words,
             avx2::not_words, avx2::popcount, avx2::max_zero_run};
}
#endif

std::atomic<bool> g_force_scalar{false};

bool env_forces_scalar() {
  const char* v = std::getenv("COPRIMATCH_FORCE_SCALAR");
  return v != nullptr && v[0] != '\0' && v[0] != '0';
}

bool use_avx2() {
  if (g_force_scalar.load(std::memory_order_relaxed)) return false;
  static const bool env_scalar = env_forces_scalar();
  if (env_scalar) return false;
  return avx2_supported();
}

}  // namespace

bool avx2_supported() {
#if defined(__x86_64__) || defined(_M_X64)
  static const bool ok = __builtin_cpu_supports("avx2");
  return ok;
#else
  return false;
#endif
}

const Ops& ops() {
  static const Ops scalar_ops = make_scalar();
#if defined(__x86_64__) || defined(_M_X64)
  static const Ops avx2_ops = make_avx2();
  if (use_avx2()) return avx2_ops;
#endif
  return scalar_ops;
}

const char* active_isa() {
#if defined(__x86_64__) || defined(_M_X64)
  if (use_avx2()) return "avx2";
#endif
  return "scalar";
}

void force_scalar(bool on) { g_force_scalar.store(on, std::memory_order_relaxed); }

}  // namespace coprimatch::kernels
