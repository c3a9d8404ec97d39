#include "sphorb/weights.hpp"

#include <cassert>
#include <sstream>

namespace sphorb {

Weight zero_weight(std::size_t dim) { return Weight(dim, Rat(0)); }

Weight basis_weight(std::size_t dim, std::size_t index, const Rat& value) {
  Weight w = zero_weight(dim);
  assert(index < dim);
  w[index] = value;
  return w;
}

Weight add(const Weight& a, const Weight& b) {
  assert(a.size() == b.size());
  Weight out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Weight sub(const Weight& a, const Weight& b) {
  assert(a.size() == b.size());
  Weight out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Weight neg(const Weight& a) {
  Weight out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

Weight scale(const Rat& c, const Weight& a) {
  Weight out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
  return out;
}

Rat dot(const Weight& a, const Weight& b) {
  assert(a.size() == b.size());
  Rat acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

bool is_zero(const Weight& a) {
  for (const Rat& c : a)
    if (c != 0) return false;
  return true;
}

int lex_compare(const Weight& a, const Weight& b) {
  assert(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c;
  }
  return 0;
}

Weight reflect(const Weight& w, const Weight& alpha) {
  Rat aa = dot(alpha, alpha);
  assert(aa != 0);
  Rat c = 2 * dot(w, alpha) / aa;
  return sub(w, scale(c, alpha));
}

std::string coords_str(const Weight& w) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ", ";
    os << w[i].get_str();
  }
  os << ']';
  return os.str();
}

}  // namespace sphorb
