#include "doctest.h"
#include "sphorb/weights.hpp"

using namespace sphorb;

TEST_CASE("basis weights are orthonormal under dot") {
  const Weight e0 = basis_weight(3, 0);
  const Weight e1 = basis_weight(3, 1);
  CHECK(dot(e0, e0) == 1);
  CHECK(dot(e0, e1) == 0);
}

TEST_CASE("arithmetic helpers") {
  const Weight a = {rat(1), rat(2), rat(-1)};
  const Weight b = {rat(0), rat(1, 2), rat(1)};
  CHECK(add(a, b) == Weight{rat(1), rat(5, 2), rat(0)});
  CHECK(sub(a, b) == Weight{rat(1), rat(3, 2), rat(-2)});
  CHECK(neg(a) == Weight{rat(-1), rat(-2), rat(1)});
  CHECK(scale(rat(2), b) == Weight{rat(0), rat(1), rat(2)});
  CHECK(dot(a, b) == rat(0));
  CHECK(is_zero(zero_weight(4)));
  CHECK(!is_zero(a));
}

TEST_CASE("lexicographic order") {
  const Weight a = {rat(1), rat(0)};
  const Weight b = {rat(1), rat(1)};
  CHECK(lex_compare(a, b) < 0);
  CHECK(lex_compare(b, a) > 0);
  CHECK(lex_compare(a, a) == 0);
  CHECK(WeightLess{}(a, b));
}

TEST_CASE("reflection in a root hyperplane") {
  // reflecting e1 in e1 - e2 swaps the coordinates
  const Weight e1 = basis_weight(2, 0);
  const Weight e2 = basis_weight(2, 1);
  const Weight alpha = sub(e1, e2);
  CHECK(reflect(e1, alpha) == e2);
  CHECK(reflect(e2, alpha) == e1);
  // reflecting a vector already orthogonal to alpha is the identity
  const Weight s = add(e1, e2);
  CHECK(reflect(s, alpha) == s);
  // reflection is an involution on an arbitrary vector
  const Weight w = {rat(3), rat(-1, 2)};
  CHECK(reflect(reflect(w, alpha), alpha) == w);
}

TEST_CASE("coordinate rendering") {
  CHECK(coords_str(Weight{rat(1), rat(-1, 2), rat(0)}) == "[1, -1/2, 0]");
}
