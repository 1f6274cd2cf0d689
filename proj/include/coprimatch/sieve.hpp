#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "coprimatch/rational.hpp"

namespace coprimatch {

struct capacity_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Factorization {
  uint64_t value = 1;
  // ascending distinct primes with exponents; empty for value 1
  std::vector<std::pair<uint32_t, uint32_t>> factors;
};

// Smallest-prime-factor table. Built once, immutable afterwards, safe for
// unsynchronized shared reads. It is the single factorization authority:
// everything downstream factors through it, no trial division elsewhere.
class FactorSieve {
 public:
  static constexpr uint64_t kDefaultBudgetBytes = uint64_t{1} << 30;

  explicit FactorSieve(uint64_t limit, uint64_t budget_bytes = kDefaultBudgetBytes);

  uint64_t limit() const { return limit_; }
  const std::vector<uint32_t>& primes() const { return primes_; }

  uint32_t spf(uint64_t k) const {
    check_range(k, 2);
    return spf_[k];
  }
  bool is_prime(uint64_t k) const {
    check_range(k, 2);
    return spf_[k] == k;
  }

  Factorization factorize(uint64_t k) const;

  // number of distinct primes dividing k; omega(1) = 0
  uint32_t omega(uint64_t k) const;
  // Euler totient; phi(1) = 1
  uint64_t phi(uint64_t k) const;
  // k / phi(k) as an exact rational
  Rat phi_ratio(uint64_t k) const;

  // Product of the distinct odd primes p <= bound dividing k (1 if none).
  uint64_t odd_squarefree_part(uint64_t k, uint64_t bound) const;
  // Same with bound = floor(ln m): the small-prime kernel used by the
  // totient-excess statistics.
  uint64_t odd_squarefree_part_log(uint64_t k, uint64_t m) const;

  // Sum of 1/p over primes p | i with ln m < p <= m, exact. m >= 3.
  Rat mid_prime_reciprocal_sum(uint64_t i, uint64_t m) const;

  // omega(k) <= 2 ln k for k > 1, verdict certified by directed rounding.
  bool omega_log_bounded(uint64_t k) const;
  // k/phi(k) <= 3 ln omega(k) for odd k with omega(k) >= 2, certified.
  bool totient_ratio_log_bounded(uint64_t k) const;

 private:
  void check_range(uint64_t k, uint64_t lo) const {
    if (k < lo || k > limit_) throw std::out_of_range("FactorSieve: argument out of range");
  }

  uint64_t limit_;
  std::vector<uint32_t> spf_;
  std::vector<uint32_t> primes_;
};

// gcd(s, t) is a power of two (1 counts). Pure gcd definition, no sieve.
bool two_coprime(uint64_t s, uint64_t t);

// largest odd divisor
inline uint64_t odd_part(uint64_t k) {
  while (k != 0 && (k & 1) == 0) k >>= 1;
  return k;
}

}  // namespace coprimatch
