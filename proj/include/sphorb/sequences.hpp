#ifndef SPHORB_SEQUENCES_HPP
#define SPHORB_SEQUENCES_HPP

// Construction of maximal sequences of strongly orthogonal noncompact
// weights: gamma_1 is the highest weight of p (of p_+ in the Hermitian case)
// and each gamma_{i+1} is drawn from the Weyl orbit of gamma_1 subject to
// strong orthogonality with all predecessors and dominance of every partial
// sum.  A depth-first search enumerates every maximal sequence; most families
// admit exactly one, SL(2k,R) two, SO(p,q) up to six.

#include <string>
#include <vector>

#include "sphorb/symmetric_pair.hpp"

namespace sphorb {

struct SOSequence {
  std::vector<Weight> gammas;
  std::string label;  // "principal", "sigma(+,-)", "tau(+)", ...

  std::size_t length() const { return gammas.size(); }
  // 2<w,gamma_j>/<gamma_j,gamma_j>
  Rat coroot_value(std::size_t j, const Weight& w) const;
  Weight partial_sum(std::size_t i) const;  // gamma_1 + ... + gamma_i
};

// True iff neither g1+g2 nor g1-g2 is a root of K or a weight of p.  The
// zero weight always counts as present: t itself consists of weight-zero
// compact vectors, so g2 = -g1 is never strongly orthogonal to g1 even when
// p has no zero weight.
bool strongly_orthogonal(const Weight& g1, const Weight& g2,
                         const SymmetricPair& pair);

// All admissible next elements for a (possibly empty) prefix, in
// lexicographic order.  Empty prefix yields exactly {highest_p_weight}.
std::vector<Weight> extend_candidates(const SymmetricPair& pair,
                                      const std::vector<Weight>& prefix);

// All maximal sequences, depth-first, deduplicated, labelled.
std::vector<SOSequence> maximal_sequences(const SymmetricPair& pair);

// min(rank K, real rank), except SL(n,H) where the true length is floor(n/2).
// For SO(p,q) this is only an upper bound on branch lengths.
int sequence_length_law(const SymmetricPair& pair);

}  // namespace sphorb

#endif
