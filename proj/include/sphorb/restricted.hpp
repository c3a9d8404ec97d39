#ifndef SPHORB_RESTRICTED_HPP
#define SPHORB_RESTRICTED_HPP

// Restriction of the roots of K to the span of the coroots h_1,...,h_n of a
// strongly orthogonal sequence.  Every nonzero restriction, written in
// gamma-coordinates c_j = <alpha,gamma_j>/<gamma_j,gamma_j>, falls into one
// of seven classes distinguished by the integer pattern (2c_1,...,2c_n):
//
//   b: a single entry 1      C: a single entry 2
//   a/A: entries (1,-1) on a pair of slots      (Hermitian pairs only)
//   d:   entries (1,1) and (1,-1) both present, equal multiplicities
//   a_{11,+}/a_{11,-}: the length-two SO(p,q) tau sequences, where the
//        (1,1) and (1,-1) patterns occur with unrelated multiplicities
//
// Within a class the multiplicity is uniform across slots/pairs; this is
// asserted, not assumed.

#include <string>
#include <vector>

#include "sphorb/sequences.hpp"
#include "sphorb/symmetric_pair.hpp"

namespace sphorb {

enum class RootClass { a, A, b, C, d, a11_plus, a11_minus };

std::string root_class_name(RootClass c);  // "a", "A", ..., "a_{11,+}"

struct RestrictedRoot {
  std::vector<Rat> gamma_coords;  // restriction = sum_j gamma_coords[j] * gamma_j
  long multiplicity = 0;
  RootClass cls;
};

struct RestrictedSystem {
  long n = 0;  // sequence length
  long m_a = 0, m_A = 0, m_b = 0, m_C = 0, m_d = 0;
  long m_11_plus = 0, m_11_minus = 0;
  long zero_restrictions = 0;  // roots of K vanishing on all h_j
  std::vector<RestrictedRoot> roots;  // distinct nonzero patterns, normalized

  bool tau_type() const { return m_11_plus + m_11_minus > 0; }
};

RestrictedSystem restrict_roots(const SymmetricPair& pair,
                                const SOSequence& seq);

// "(a_2)^2(b_2)^1" — classes in the order a, A, b, C, d, a_{11,+}, a_{11,-},
// zero multiplicities omitted, subscript = sequence length.
std::string signature_string(const RestrictedSystem& rs);

struct QRS {
  long q = 0, r = 0, s = 0;
};

// Constants entering the dimension/degree formulas for the standard classes:
// q = (n-i)(m_a+m_A+2m_d) + m_b + m_C, r = m_a+m_A, s = m_d.
// For tau-type systems the (q,r,s) shape exists only at i = 1 (pairs not yet
// visible) or when the two a_{11} multiplicities coincide (then s carries
// them); otherwise UnsupportedError.
QRS qrs_constants(const RestrictedSystem& rs, long i);

// i(q+1) + i(i-1)P/2 with P the total pair multiplicity (= r+2s for the
// standard classes, m_{11,+}+m_{11,-} for tau).  Valid for every class.
long dimension_formula(const RestrictedSystem& rs, long i);

// Positive roots of K not orthogonal to all of gamma_1..gamma_i.
std::vector<Weight> delta_plus_roots(const SymmetricPair& pair,
                                     const SOSequence& seq, long i);

}  // namespace sphorb

#endif
