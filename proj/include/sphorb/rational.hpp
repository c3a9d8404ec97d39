#ifndef SPHORB_RATIONAL_HPP
#define SPHORB_RATIONAL_HPP

// Thin aliases over GMP's C++ classes plus the handful of exact helpers the
// rest of the library leans on.  Everything downstream is arbitrary-precision
// rational arithmetic; no floating point anywhere.

#include <gmpxx.h>

#include <string>

#include "sphorb/errors.hpp"

namespace sphorb {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Int factorial(long n) {
  if (n < 0) throw ParamError("factorial of negative argument");
  Int acc = 1;
  for (long k = 2; k <= n; ++k) acc *= k;
  return acc;
}

inline Int binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Int acc;
  mpz_bin_uiui(acc.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return acc;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline Int to_integer(const Rat& r) {
  if (!is_integer(r)) {
    throw ContractError("expected an integer, got " + r.get_str());
  }
  return r.get_num();
}

inline std::string to_string(const Int& n) { return n.get_str(); }
inline std::string to_string(const Rat& r) { return r.get_str(); }

}  // namespace sphorb

#endif
