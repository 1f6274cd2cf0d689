#include "coprimatch/certified.hpp"

#include <mpfr.h>

#include <array>
#include <stdexcept>

namespace coprimatch::certified {

namespace {

constexpr std::array<mpfr_prec_t, 5> kPrecLadder = {96, 192, 384, 768, 1536};

struct Real {
  mpfr_t x;
  explicit Real(mpfr_prec_t p) { mpfr_init2(x, p); }
  ~Real() { mpfr_clear(x); }
  Real(const Real&) = delete;
  Real& operator=(const Real&) = delete;
};

// expr = scale_num/scale_den * ln k
void scaled_ln(mpfr_t out, const Rat& scale, uint64_t k, mpfr_rnd_t rnd) {
  mpfr_set_ui(out, static_cast<unsigned long>(k), rnd);
  mpfr_log(out, out, rnd);
  mpfr_mul_q(out, out, scale.get_mpq_t(), rnd);
}

// expr = (ln m)^e; monotone in ln m for positive base
void ln_pow(mpfr_t out, uint64_t m, int e, mpfr_rnd_t rnd) {
  mpfr_set_ui(out, static_cast<unsigned long>(m), rnd);
  mpfr_log(out, out, rnd);
  mpfr_pow_ui(out, out, static_cast<unsigned long>(e), rnd);
}

// expr = (ln ln m)^4 / ln m for m >= 3 (all factors positive)
void loglog_over_log(mpfr_t out, uint64_t m, mpfr_rnd_t num_rnd) {
  // numerator rounded in num_rnd, denominator in the opposite direction
  mpfr_rnd_t den_rnd = (num_rnd == MPFR_RNDD) ? MPFR_RNDU : MPFR_RNDD;
  Real den(mpfr_get_prec(out));
  mpfr_set_ui(out, static_cast<unsigned long>(m), num_rnd);
  mpfr_log(out, out, num_rnd);
  mpfr_log(out, out, num_rnd);
  mpfr_pow_ui(out, out, 4, num_rnd);
  mpfr_set_ui(den.x, static_cast<unsigned long>(m), den_rnd);
  mpfr_log(den.x, den.x, den_rnd);
  mpfr_div(out, out, den.x, num_rnd);
}

void ln_of_uint(mpfr_t out, uint64_t value, mpfr_rnd_t rnd) {
  mpfr_set_ui(out, static_cast<unsigned long>(value), rnd);
  mpfr_log(out, out, rnd);
}

template <typename Fill>
int cmp_escalating(const Rat& lhs, Fill fill) {
  for (mpfr_prec_t prec : kPrecLadder) {
    Real lo(prec), hi(prec);
    fill(lo.x, MPFR_RNDD);
    fill(hi.x, MPFR_RNDU);
    if (mpfr_cmp_q(lo.x, lhs.get_mpq_t()) > 0) return -1;
    if (mpfr_cmp_q(hi.x, lhs.get_mpq_t()) < 0) return 1;
  }
  throw std::runtime_error("certified comparison could not separate operands");
}

}  // namespace

DInterval ln_interval(uint64_t x) {
  Real lo(96), hi(96);
  ln_of_uint(lo.x, x, MPFR_RNDD);
  ln_of_uint(hi.x, x, MPFR_RNDU);
  return {mpfr_get_d(lo.x, MPFR_RNDD), mpfr_get_d(hi.x, MPFR_RNDU)};
}

DInterval ln_pow_interval(uint64_t m, int e) {
  Real lo(96), hi(96);
  ln_pow(lo.x, m, e, MPFR_RNDD);
  ln_pow(hi.x, m, e, MPFR_RNDU);
  return {mpfr_get_d(lo.x, MPFR_RNDD), mpfr_get_d(hi.x, MPFR_RNDU)};
}

DInterval loglog_over_log_interval(uint64_t m) {
  if (m < 3) throw std::domain_error("loglog_over_log_interval: m must be >= 3");
  Real lo(96), hi(96);
  loglog_over_log(lo.x, m, MPFR_RNDD);
  loglog_over_log(hi.x, m, MPFR_RNDU);
  return {mpfr_get_d(lo.x, MPFR_RNDD), mpfr_get_d(hi.x, MPFR_RNDU)};
}

DInterval weighted_ln_sum_interval(std::span<const std::pair<uint64_t, uint64_t>> terms) {
  Real lo(128), hi(128), t(128);
  mpfr_set_zero(lo.x, 1);
  mpfr_set_zero(hi.x, 1);
  for (const auto& [base, coeff] : terms) {
    ln_of_uint(t.x, base, MPFR_RNDD);
    mpfr_mul_ui(t.x, t.x, static_cast<unsigned long>(coeff), MPFR_RNDD);
    mpfr_add(lo.x, lo.x, t.x, MPFR_RNDD);
    ln_of_uint(t.x, base, MPFR_RNDU);
    mpfr_mul_ui(t.x, t.x, static_cast<unsigned long>(coeff), MPFR_RNDU);
    mpfr_add(hi.x, hi.x, t.x, MPFR_RNDU);
  }
  return {mpfr_get_d(lo.x, MPFR_RNDD), mpfr_get_d(hi.x, MPFR_RNDU)};
}

DInterval rat_interval(const Rat& r) {
  Real lo(96), hi(96);
  mpfr_set_q(lo.x, r.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi.x, r.get_mpq_t(), MPFR_RNDU);
  return {mpfr_get_d(lo.x, MPFR_RNDD), mpfr_get_d(hi.x, MPFR_RNDU)};
}

long floor_ln(uint64_t m) {
  if (m == 0) throw std::domain_error("floor_ln: m must be >= 1");
  if (m == 1) return 0;
  for (mpfr_prec_t prec : kPrecLadder) {
    Real lo(prec), hi(prec);
    ln_of_uint(lo.x, m, MPFR_RNDD);
    ln_of_uint(hi.x, m, MPFR_RNDU);
    long flo = mpfr_get_si(lo.x, MPFR_RNDD);
    long fhi = mpfr_get_si(hi.x, MPFR_RNDD);
    if (flo == fhi) return flo;
  }
  throw std::runtime_error("floor_ln: could not certify floor");
}

int cmp_rat_vs_scaled_ln(const Rat& lhs, const Rat& scale, uint64_t k) {
  if (k < 2) throw std::domain_error("cmp_rat_vs_scaled_ln: k must be >= 2");
  return cmp_escalating(lhs, [&](mpfr_t out, mpfr_rnd_t rnd) { scaled_ln(out, scale, k, rnd); });
}

int cmp_ln_vs_ln_pow(uint64_t value, uint64_t m, int e) {
  if (value == 0) throw std::domain_error("cmp_ln_vs_ln_pow: value must be >= 1");
  if (m < 2) throw std::domain_error("cmp_ln_vs_ln_pow: m must be >= 2");
  // the one rational coincidence: ln value == (ln m)^1 iff value == m
  if (value == m && e == 1) return 0;
  for (mpfr_prec_t prec : kPrecLadder) {
    Real vlo(prec), vhi(prec), blo(prec), bhi(prec);
    ln_of_uint(vlo.x, value, MPFR_RNDD);
    ln_of_uint(vhi.x, value, MPFR_RNDU);
    ln_pow(blo.x, m, e, MPFR_RNDD);
    ln_pow(bhi.x, m, e, MPFR_RNDU);
    if (mpfr_cmp(vhi.x, blo.x) < 0) return -1;
    if (mpfr_cmp(vlo.x, bhi.x) > 0) return 1;
  }
  throw std::runtime_error("cmp_ln_vs_ln_pow: could not separate operands");
}

int cmp_rat_vs_loglog_over_log(const Rat& lhs, uint64_t m) {
  if (m < 3) throw std::domain_error("cmp_rat_vs_loglog_over_log: m must be >= 3");
  return cmp_escalating(lhs, [&](mpfr_t out, mpfr_rnd_t rnd) { loglog_over_log(out, m, rnd); });
}

int cmp_int_vs_ln(uint64_t lhs, uint64_t n) {
  if (n < 2) throw std::domain_error("cmp_int_vs_ln: n must be >= 2");
  return cmp_escalating(Rat(static_cast<unsigned long>(lhs)),
                        [&](mpfr_t out, mpfr_rnd_t rnd) { ln_of_uint(out, n, rnd); });
}

}  // namespace coprimatch::certified
