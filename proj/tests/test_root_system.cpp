#include <algorithm>

#include "doctest.h"
#include "sphorb/errors.hpp"
#include "sphorb/root_system.hpp"

using namespace sphorb;

namespace {

RootSystem b2() { return RootSystem({{BlockType::B, 2, 0, "e"}}, 2); }
RootSystem u3() { return RootSystem({{BlockType::A, 3, 0, "e"}}, 3); }

Weight w2(long a, long b) { return {rat(a), rat(b)}; }
Weight w3(long a, long b, long c) { return {rat(a), rat(b), rat(c)}; }

}  // namespace

TEST_CASE("positive roots of the classical blocks") {
  CHECK(b2().positive_roots().size() == 4);  // e1-e2, e1+e2, e1, e2
  CHECK(u3().positive_roots().size() == 3);  // ei - ej
  const RootSystem c2({{BlockType::C, 2, 0, "e"}}, 2);
  CHECK(c2.positive_roots().size() == 4);  // e1-e2, e1+e2, 2e1, 2e2
  const RootSystem d3({{BlockType::D, 3, 0, "e"}}, 3);
  CHECK(d3.positive_roots().size() == 6);
  const RootSystem torus({{BlockType::Torus, 1, 0, "e", 0}}, 1);
  CHECK(torus.positive_roots().empty());
}

TEST_CASE("product groups act on disjoint coordinates") {
  const RootSystem k({{BlockType::B, 1, 0, "e"}, {BlockType::D, 2, 1, "f"}},
                     3);
  CHECK(k.positive_roots().size() == 1 + 2);
  CHECK(k.ambient_dim() == 3);
  // rho: e-block 1/2, f-block (1, 0)
  CHECK(k.rho() == Weight{rat(1, 2), rat(1), rat(0)});
}

TEST_CASE("root membership and dominance") {
  const RootSystem k = b2();
  CHECK(k.is_root(w2(1, -1)));
  CHECK(k.is_root(w2(0, -1)));
  CHECK(!k.is_root(w2(2, 0)));
  CHECK(k.is_dominant(w2(2, 1)));
  CHECK(!k.is_dominant(w2(1, 2)));
  CHECK(k.is_dominant(w2(1, 0)));
  // spinor weight: dominant and integral for so(5)
  CHECK(k.is_dominant({rat(1, 2), rat(1, 2)}));
  CHECK(k.is_integral({rat(1, 2), rat(1, 2)}));
  CHECK(!k.is_integral({rat(1, 3), rat(0)}));
}

TEST_CASE("Weyl orbits by reflection closure") {
  const auto orbit_b2 = b2().weyl_orbit(w2(1, 0));
  CHECK(orbit_b2.size() == 4);  // +-e1, +-e2
  const auto orbit_u3 = u3().weyl_orbit(w3(1, 1, 0));
  CHECK(orbit_u3.size() == 3);  // coordinate permutations
  CHECK(std::find(orbit_u3.begin(), orbit_u3.end(), w3(0, 1, 1)) !=
        orbit_u3.end());
  // the torus has a trivial Weyl group
  const RootSystem torus({{BlockType::Torus, 1, 0, "e", 0}}, 1);
  CHECK(torus.weyl_orbit({rat(5)}).size() == 1);
}

TEST_CASE("irreducible dimensions by the Weyl product formula") {
  const RootSystem k = b2();  // so(5)
  CHECK(k.irrep_dim(w2(0, 0)) == 1);
  CHECK(k.irrep_dim(w2(1, 0)) == 5);
  CHECK(k.irrep_dim(w2(1, 1)) == 10);  // adjoint
  CHECK(k.irrep_dim(w2(2, 0)) == 14);
  CHECK(k.irrep_dim({rat(1, 2), rat(1, 2)}) == 4);  // spinor

  const RootSystem a = u3();
  CHECK(a.irrep_dim(w3(1, 0, 0)) == 3);
  CHECK(a.irrep_dim(w3(1, 1, 0)) == 3);
  CHECK(a.irrep_dim(w3(2, 1, 0)) == 8);  // adjoint of su(3)

  const RootSystem c2({{BlockType::C, 2, 0, "e"}}, 2);
  CHECK(c2.irrep_dim(w2(1, 0)) == 4);
  CHECK(c2.irrep_dim(w2(1, 1)) == 5);
  CHECK(c2.irrep_dim(w2(2, 0)) == 10);  // adjoint

  const RootSystem d3({{BlockType::D, 3, 0, "e"}}, 3);
  CHECK(d3.irrep_dim(w3(1, 0, 0)) == 6);  // vector of so(6)

  // dimension of a product group representation factors
  const RootSystem prod(
      {{BlockType::A, 2, 0, "e"}, {BlockType::A, 3, 2, "f"}}, 5);
  CHECK(prod.irrep_dim({rat(1), rat(0), rat(0), rat(0), rat(-1)}) == 2 * 3);
}

TEST_CASE("irrep_dim rejects non-dominant and non-integral weights") {
  CHECK_THROWS_AS((void)b2().irrep_dim(w2(1, 2)), ContractError);
  CHECK_THROWS_AS((void)b2().irrep_dim({rat(1, 3), rat(0)}), ContractError);
}
