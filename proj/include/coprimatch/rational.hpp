#pragma once

#include <gmpxx.h>

#include <string>

namespace coprimatch {

// Exact arithmetic everywhere a verdict depends on it. GMP is the backend;
// aliases keep signatures readable.
using Int = mpz_class;
using Rat = mpq_class;

// "p/q" in lowest terms, "p" when the denominator is 1.
inline std::string rat_str(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline Rat make_rat(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace coprimatch
