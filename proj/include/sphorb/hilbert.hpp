#ifndef SPHORB_HILBERT_HPP
#define SPHORB_HILBERT_HPP

// Hilbert functions of the orbit closures and the two routes to their
// degree: exact interpolation of the dimension-count function, and the
// closed form via an integral of the root product over an ordered simplex.

#include <map>
#include <string>
#include <vector>

#include "sphorb/ktypes.hpp"
#include "sphorb/rational.hpp"
#include "sphorb/restricted.hpp"
#include "sphorb/sequences.hpp"
#include "sphorb/symmetric_pair.hpp"

namespace sphorb {

inline constexpr long long kDefaultTermBudget = 10'000'000;

// Dense univariate polynomial with exact rational coefficients,
// coeffs[k] multiplying t^k.
struct Poly1 {
  std::vector<Rat> coeffs;

  long degree() const;      // -1 for the zero polynomial
  Rat leading() const;      // 0 for the zero polynomial
  Rat eval(const Rat& t) const;
};

// Exact interpolation through the given nodes (all distinct).
Poly1 interpolate(const std::vector<long>& ts, const std::vector<Rat>& values);

// Bernoulli numbers B_0..B_m, second convention (B_1 = +1/2), which makes
// power-sum formulas come out without sign fiddling.
std::vector<Rat> bernoulli_plus(long m);

// S_p(t) = sum_{k=0}^{t} k^p as a polynomial in t (0^0 = 1).
Poly1 faulhaber_polynomial(long p);
Rat faulhaber_sum(long p, long t);

// Sparse multivariate polynomial, exponent vector -> coefficient.
using ExpVec = std::vector<int>;
using MPoly = std::map<ExpVec, Rat>;

// integral over { x_1 >= ... >= x_i >= 0, sum x_j <= 1 } of
//   prod_j x_j^q * prod_{j<k} (x_j - x_k)^r * prod_{j<k} (x_j^2 - x_k^2)^s.
Rat simplex_integral(long q, long r, long s, long i,
                     long long term_budget = kDefaultTermBudget);

// Same integral for s = 0 via the Laguerre ensemble product formula,
// exact in half-integer gamma values.
Rat selberg_degree(long q, long r, long i);

// Integral of an arbitrary polynomial over the same ordered simplex.
Rat ordered_simplex_integral(const MPoly& f, long i,
                             long long term_budget = kDefaultTermBudget);

// Number of lattice points of grading <= t weighted by the dimension of the
// corresponding K-type: the Hilbert function of the orbit closure.
Int hilbert_value(const SymmetricPair& pair, const SOSequence& seq, long i,
                  long t);

// Exact polynomial agreeing with hilbert_value for all t >= dim + 2,
// obtained by interpolation and checked on three extra sample points.
Poly1 hilbert_polynomial(const SymmetricPair& pair, const SOSequence& seq,
                         long i);

struct OrbitGeometry {
  long dim = 0;
  Rat leading;   // leading coefficient of the Hilbert polynomial
  Rat degree;    // leading * dim!
  std::string route;  // "interpolation" or "closed_form"
};

// Degree via the closed form: the product over the weights of the i-th
// nilradical-type root set, integrated over the ordered simplex and divided
// by the same product evaluated at the K half-sum.  Only available when the
// coefficient cone is standard; throws UnsupportedError otherwise.
OrbitGeometry degree_closed(const SymmetricPair& pair, const SOSequence& seq,
                            long i,
                            long long term_budget = kDefaultTermBudget);

// Degree via interpolation of the Hilbert function.
OrbitGeometry degree_interpolated(const SymmetricPair& pair,
                                  const SOSequence& seq, long i);

struct GeometryReport {
  long i = 0;
  long dim_formula = 0;
  OrbitGeometry brute;
  bool closed_supported = false;
  OrbitGeometry closed;   // valid only when closed_supported
  bool routes_agree = false;
};

GeometryReport orbit_geometry(const SymmetricPair& pair, const SOSequence& seq,
                              long i,
                              long long term_budget = kDefaultTermBudget);

}  // namespace sphorb

#endif
