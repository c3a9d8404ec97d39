#include "sphorb/root_system.hpp"

#include <deque>
#include <set>

#include "sphorb/errors.hpp"

namespace sphorb {

namespace {

// Positive roots and simple roots of one classical block, in ambient
// coordinates [offset, offset + rank).
void block_roots(const Block& b, int dim, std::vector<Weight>& positive,
                 std::vector<Weight>& simple) {
  const int m = b.rank;
  const int o = b.offset;
  auto e = [&](int i) { return basis_weight(dim, o + i); };
  auto diff = [&](int i, int j) { return sub(e(i), e(j)); };
  auto sum = [&](int i, int j) { return add(e(i), e(j)); };

  switch (b.type) {
    case BlockType::Torus:
      return;
    case BlockType::A:
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) positive.push_back(diff(i, j));
      for (int i = 0; i + 1 < m; ++i) simple.push_back(diff(i, i + 1));
      return;
    case BlockType::B:
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
          positive.push_back(diff(i, j));
          positive.push_back(sum(i, j));
        }
      for (int i = 0; i < m; ++i) positive.push_back(e(i));
      for (int i = 0; i + 1 < m; ++i) simple.push_back(diff(i, i + 1));
      simple.push_back(e(m - 1));
      return;
    case BlockType::C:
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
          positive.push_back(diff(i, j));
          positive.push_back(sum(i, j));
        }
      for (int i = 0; i < m; ++i) positive.push_back(scale(2, e(i)));
      for (int i = 0; i + 1 < m; ++i) simple.push_back(diff(i, i + 1));
      simple.push_back(scale(2, e(m - 1)));
      return;
    case BlockType::D:
      if (m < 2) return;  // so(2) carries no roots
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
          positive.push_back(diff(i, j));
          positive.push_back(sum(i, j));
        }
      for (int i = 0; i + 1 < m; ++i) simple.push_back(diff(i, i + 1));
      simple.push_back(sum(m - 2, m - 1));
      return;
  }
  throw ContractError("unhandled block type");
}

}  // namespace

RootSystem::RootSystem(std::vector<Block> blocks, int ambient_dim)
    : blocks_(std::move(blocks)), ambient_dim_(ambient_dim) {
  for (const Block& b : blocks_) {
    if (b.offset < 0 || b.offset + b.rank > ambient_dim_)
      throw ParamError("block exceeds ambient dimension");
    block_roots(b, ambient_dim_, positive_, simple_);
  }
  rho_ = zero_weight(ambient_dim_);
  for (const Weight& a : positive_) rho_ = add(rho_, a);
  rho_ = scale(rat(1, 2), rho_);
}

bool RootSystem::is_root(const Weight& w) const {
  for (const Weight& a : positive_) {
    if (lex_compare(a, w) == 0) return true;
    if (lex_compare(neg(a), w) == 0) return true;
  }
  return false;
}

bool RootSystem::is_dominant(const Weight& w) const {
  for (const Weight& a : simple_)
    if (dot(w, a) < 0) return false;
  return true;
}

bool RootSystem::is_integral(const Weight& w) const {
  for (const Weight& a : positive_) {
    Rat c = 2 * dot(w, a) / dot(a, a);
    if (!is_integer(c)) return false;
  }
  return true;
}

std::vector<Weight> RootSystem::weyl_orbit(const Weight& w) const {
  std::set<Weight, WeightLess> seen;
  std::deque<Weight> queue;
  seen.insert(w);
  queue.push_back(w);
  while (!queue.empty()) {
    Weight cur = queue.front();
    queue.pop_front();
    for (const Weight& a : simple_) {
      Weight next = reflect(cur, a);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return std::vector<Weight>(seen.begin(), seen.end());
}

Int RootSystem::irrep_dim(const Weight& lambda) const {
  if (!is_dominant(lambda))
    throw ContractError("irrep_dim: weight is not dominant: " +
                        coords_str(lambda));
  if (!is_integral(lambda))
    throw ContractError("irrep_dim: weight is not integral: " +
                        coords_str(lambda));
  Weight shifted = add(lambda, rho_);
  Rat acc = 1;
  for (const Weight& a : positive_) acc *= dot(shifted, a) / dot(rho_, a);
  return to_integer(acc);
}

}  // namespace sphorb
