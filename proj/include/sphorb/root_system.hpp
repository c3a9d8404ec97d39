#ifndef SPHORB_ROOT_SYSTEM_HPP
#define SPHORB_ROOT_SYSTEM_HPP

// Root system of a compact connected group given as a product of classical
// blocks acting on disjoint coordinate ranges of the ambient space.  A block
// of type A models the full unitary group u(m) (the central direction is kept,
// so weights are arbitrary integer vectors); B/C/D are the odd orthogonal,
// symplectic and even orthogonal algebras; Torus is a bare so(2)/u(1) factor
// contributing coordinates but no roots.

#include <string>
#include <vector>

#include "sphorb/weights.hpp"

namespace sphorb {

enum class BlockType { A, B, C, D, Torus };

struct Block {
  BlockType type;
  int rank;        // number of epsilon-coordinates of the block
  int offset;      // first ambient coordinate used by the block
  std::string label;  // display letter for the coordinates: "e", "f", ...
  int index_base = 1;  // display index of the first coordinate
};

class RootSystem {
 public:
  RootSystem() = default;
  RootSystem(std::vector<Block> blocks, int ambient_dim);

  int ambient_dim() const { return ambient_dim_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  const std::vector<Weight>& positive_roots() const { return positive_; }
  const std::vector<Weight>& simple_roots() const { return simple_; }
  const Weight& rho() const { return rho_; }

  bool is_root(const Weight& w) const;
  bool is_dominant(const Weight& w) const;
  // 2<w,alpha>/<alpha,alpha> integral for every root alpha.
  bool is_integral(const Weight& w) const;

  // Weyl group orbit via breadth-first closure under simple reflections.
  std::vector<Weight> weyl_orbit(const Weight& w) const;

  // Dimension of the irreducible representation with highest weight lambda
  // (Weyl's product formula, evaluated exactly).  lambda must be dominant
  // and integral.
  Int irrep_dim(const Weight& lambda) const;

 private:
  std::vector<Block> blocks_;
  int ambient_dim_ = 0;
  std::vector<Weight> positive_;
  std::vector<Weight> simple_;
  Weight rho_;
};

}  // namespace sphorb

#endif
