#ifndef SPHORB_KTYPES_HPP
#define SPHORB_KTYPES_HPP

// K-type lattices of the orbit closures: the highest weights occurring in
// the regular functions are exactly lambda = a_1 gamma_1 + ... + a_i gamma_i
// with integer coefficients constrained by the shape of the restricted root
// system, filtered by total degree.

#include <vector>

#include "sphorb/restricted.hpp"
#include "sphorb/sequences.hpp"

namespace sphorb {

// Ruling case for the coefficient cone.
//   standard:        a_1 >= ... >= a_i >= 0  (always for i < n; for i = n
//                    whenever single-slot classes b/C are present)
//   hermitian_an_An: i = n, difference-pairs only; the closure keeps the
//                    standard cone, the open orbit allows a_n to run over Z
//   dn_full:         i = n, both pair signs present; a_{n-1} >= |a_n|
enum class ConeClass { standard, hermitian_an_An, dn_full };

struct LatticeSpec {
  long i = 0;
  long n = 0;
  ConeClass cone = ConeClass::standard;
  bool closure = true;
};

LatticeSpec lattice_spec(const RestrictedSystem& rs, long i,
                         bool closure = true);

using CoeffTuple = std::vector<long>;

bool admits(const LatticeSpec& spec, const CoeffTuple& a);

// Degree of the K-type within the coordinate ring filtration: sum of the
// coefficients, with |a_n| in the dn_full case (the sign-flipped chain's
// generator has the same homogeneity as the unflipped one).
long tuple_grading(const LatticeSpec& spec, const CoeffTuple& a);

// All admitted tuples of grading <= t, lexicographically descending.
// Requires closure = true (the open-orbit ring is not degree-filtered here).
std::vector<CoeffTuple> filtration_layer(const LatticeSpec& spec, long t);

// |filtration_layer(spec, t)| without materializing the tuples.
unsigned long long lattice_count(const LatticeSpec& spec, long t);

Weight tuple_weight(const SOSequence& seq, const CoeffTuple& a);

}  // namespace sphorb

#endif
