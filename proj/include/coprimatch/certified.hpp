#pragma once

#include <cstdint>
#include <span>
#include <utility>

#include "coprimatch/rational.hpp"

// Comparisons of exact rationals against transcendental bounds (natural logs
// and their powers). Every verdict is one-sided: the bound is evaluated with
// MPFR in both rounding directions and the comparison only resolves when the
// rational falls clearly outside the enclosure; otherwise precision escalates.
// None of the bounds used here can equal a rational, so escalation terminates.

namespace coprimatch::certified {

// lo <= true value <= hi, as doubles (for reports, not verdicts).
struct DInterval {
  double lo;
  double hi;
};

DInterval ln_interval(uint64_t x);               // ln x, x >= 1
DInterval ln_pow_interval(uint64_t m, int e);    // (ln m)^e, m >= 2, e >= 1
DInterval loglog_over_log_interval(uint64_t m);  // (ln ln m)^4 / ln m, m >= 3
// sum of coeff * ln(base) over terms, bases >= 1
DInterval weighted_ln_sum_interval(std::span<const std::pair<uint64_t, uint64_t>> terms);
DInterval rat_interval(const Rat& r);

// floor(ln m); exact for every integer m >= 1 since ln m is never an integer
// for m >= 2.
long floor_ln(uint64_t m);

// Sign of lhs - expr. Never 0; throws if the maximum precision cannot
// separate the operands.
int cmp_rat_vs_scaled_ln(const Rat& lhs, const Rat& scale, uint64_t k);  // expr = scale * ln k
int cmp_ln_vs_ln_pow(uint64_t value, uint64_t m, int e);  // lhs = ln value, expr = (ln m)^e
int cmp_rat_vs_loglog_over_log(const Rat& lhs, uint64_t m);
int cmp_int_vs_ln(uint64_t lhs, uint64_t n);

}  // namespace coprimatch::certified
