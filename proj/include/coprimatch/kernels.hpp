#pragma once

#include <cstddef>
#include <cstdint>

// Word-level kernels behind the bitset and scan paths. Each kernel has a
// scalar reference implementation and, on x86-64, an AVX2 variant compiled in
// a separate TU. Dispatch is resolved once at startup from CPUID; the scalar
// path can be forced with COPRIMATCH_FORCE_SCALAR=1 or force_scalar(true).
// The two implementations must be bit-identical on every input; the test
// suite enforces this.

namespace coprimatch::kernels {

struct Ops {
  // dst[i] |= src[i]
  void (*or_acc)(uint64_t* dst, const uint64_t* src, std::size_t nwords);
  // dst[i] = a[i] & ~b[i]
  void (*and_not)(uint64_t* dst, const uint64_t* a, const uint64_t* b, std::size_t nwords);
  // dst[i] = a[i] & b[i]
  void (*and_words)(uint64_t* dst, const uint64_t* a, const uint64_t* b, std::size_t nwords);
  // dst[i] = ~src[i]
  void (*not_words)(uint64_t* dst, const uint64_t* src, std::size_t nwords);
  uint64_t (*popcount)(const uint64_t* w, std::size_t nwords);
  // Longest run of zero bytes in flags[0:n). Returns its length and writes
  // the start of the first run attaining it to *start (n when length is 0).
  std::size_t (*max_zero_run)(const uint8_t* flags, std::size_t n, std::size_t* start);
};

namespace scalar {
void or_acc(uint64_t* dst, const uint64_t* src, std::size_t nwords);
void and_not(uint64_t* dst, const uint64_t* a, const uint64_t* b, std::size_t nwords);
void and_words(uint64_t* dst, const uint64_t* a, const uint64_t* b, std::size_t nwords);
void not_words(uint64_t* dst, const uint64_t* src, std::size_t nwords);
uint64_t popcount(const uint64_t* w, std::size_t nwords);
std::size_t max_zero_run(const uint8_t* flags, std::size_t n, std::size_t* start);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
void or_acc(uint64_t* dst, const uint64_t* src, std::size_t nwords);
void and_not(uint64_t* dst, const uint64_t* a, const uint64_t* b, std::size_t nwords);
void and_words(uint64_t* dst, const uint64_t* a, const uint64_t* b, std::size_t nwords);
void not_words(uint64_t* dst, const uint64_t* src, std::size_t nwords);
uint64_t popcount(const uint64_t* w, std::size_t nwords);
std::size_t max_zero_run(const uint8_t* flags, std::size_t n, std::size_t* start);
}  // namespace avx2
#endif

bool avx2_supported();

// Currently dispatched table and the name of its ISA ("avx2" or "scalar").
const Ops& ops();
const char* active_isa();

// Pin dispatch to the scalar path (or release the pin). Test hook.
void force_scalar(bool on);

}  // namespace coprimatch::kernels
