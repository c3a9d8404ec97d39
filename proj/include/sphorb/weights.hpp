#ifndef SPHORB_WEIGHTS_HPP
#define SPHORB_WEIGHTS_HPP

// Weights live in a fixed ambient R^N carrying the standard inner product.
// Coordinates are exact rationals; the basis vectors are the orthonormal
// epsilon-coordinates of the compact factors (displayed as e_i, f_j, u_i, v_j
// depending on the group at hand).

#include <cstddef>
#include <vector>

#include "sphorb/rational.hpp"

namespace sphorb {

using Weight = std::vector<Rat>;

Weight zero_weight(std::size_t dim);
Weight basis_weight(std::size_t dim, std::size_t index, const Rat& value = 1);

Weight add(const Weight& a, const Weight& b);
Weight sub(const Weight& a, const Weight& b);
Weight neg(const Weight& a);
Weight scale(const Rat& c, const Weight& a);

Rat dot(const Weight& a, const Weight& b);
bool is_zero(const Weight& a);

// Total order (lexicographic); used for canonical sorting and set keys.
int lex_compare(const Weight& a, const Weight& b);

struct WeightLess {
  bool operator()(const Weight& a, const Weight& b) const {
    return lex_compare(a, b) < 0;
  }
};

// Reflection of w in the hyperplane orthogonal to root alpha.
Weight reflect(const Weight& w, const Weight& alpha);

// Plain coordinate rendering, e.g. "[1, -1/2, 0]".  Group-aware rendering
// (e1 - f2, ...) lives with SymmetricPair, which knows the block labels.
std::string coords_str(const Weight& w);

}  // namespace sphorb

#endif
