#include "doctest.h"
#include "sphorb/errors.hpp"
#include "sphorb/hilbert.hpp"

using namespace sphorb;

namespace {

struct Setup {
  SymmetricPair pair;
  SOSequence seq;
};

Setup setup(const PairParams& prm, const std::string& label_prefix = "") {
  SymmetricPair pair = make_pair(prm);
  for (const SOSequence& s : maximal_sequences(pair))
    if (label_prefix.empty() || s.label.rfind(label_prefix, 0) == 0)
      return Setup{std::move(pair), s};
  throw ParamError("no sequence with prefix " + label_prefix);
}

}  // namespace

TEST_CASE("polynomial basics") {
  const Poly1 zero;
  CHECK(zero.degree() == -1);
  CHECK(zero.leading() == 0);
  CHECK(zero.eval(rat(7)) == 0);

  Poly1 p;  // 1/2 + t^2
  p.coeffs = {rat(1, 2), rat(0), rat(1)};
  CHECK(p.degree() == 2);
  CHECK(p.leading() == 1);
  CHECK(p.eval(rat(3)) == rat(19, 2));
}

TEST_CASE("interpolation recovers t^2 + 1/2") {
  const Poly1 p = interpolate({0, 1, 2}, {rat(1, 2), rat(3, 2), rat(9, 2)});
  REQUIRE(p.degree() == 2);
  CHECK(p.coeffs[0] == rat(1, 2));
  CHECK(p.coeffs[1] == 0);
  CHECK(p.coeffs[2] == 1);
  // Repeated nodes make the Vandermonde system singular.
  CHECK_THROWS_AS((void)interpolate({0, 0}, {rat(1), rat(2)}), ContractError);
  CHECK_THROWS_AS((void)interpolate({}, {}), ParamError);
}

TEST_CASE("Bernoulli numbers, B_1 = +1/2 convention") {
  const auto B = bernoulli_plus(6);
  REQUIRE(B.size() == 7);
  CHECK(B[0] == 1);
  CHECK(B[1] == rat(1, 2));
  CHECK(B[2] == rat(1, 6));
  CHECK(B[3] == 0);
  CHECK(B[4] == rat(-1, 30));
  CHECK(B[5] == 0);
  CHECK(B[6] == rat(1, 42));
}

TEST_CASE("Faulhaber power sums") {
  CHECK(faulhaber_sum(1, 10) == 55);
  CHECK(faulhaber_sum(2, 3) == 14);
  CHECK(faulhaber_sum(0, 7) == 8);  // k = 0 term included, 0^0 = 1
  CHECK(faulhaber_sum(3, 6) == 441);

  for (long p = 0; p <= 5; ++p) {
    const Poly1 S = faulhaber_polynomial(p);
    CHECK(S.degree() == p + 1);
    for (long t = 0; t <= 6; ++t) {
      Rat direct = p == 0 ? rat(1) : rat(0);
      for (long k = 1; k <= t; ++k) {
        Rat kp = 1;
        for (long e = 0; e < p; ++e) kp *= k;
        direct += kp;
      }
      CHECK(S.eval(rat(t)) == direct);
      CHECK(faulhaber_sum(p, t) == direct);
    }
  }
}

TEST_CASE("ordered simplex volumes and moments") {
  CHECK(simplex_integral(0, 0, 0, 0) == 1);
  CHECK(simplex_integral(0, 0, 0, 2) == rat(1, 4));
  CHECK(simplex_integral(0, 1, 0, 2) == rat(1, 12));
  for (long q = 0; q <= 4; ++q)
    CHECK(simplex_integral(q, 0, 0, 1) == rat(1, q + 1));

  MPoly x1;
  x1[{1, 0}] = rat(1);
  CHECK(ordered_simplex_integral(x1, 2) == rat(1, 8));

  MPoly x1sq_x2;
  x1sq_x2[{2, 1}] = rat(1);
  CHECK(ordered_simplex_integral(x1sq_x2, 2) == rat(11, 960));
}

TEST_CASE("gamma-product formula agrees with direct integration") {
  const long cases[][3] = {{3, 2, 1}, {1, 2, 2}, {0, 2, 2},
                           {2, 2, 3}, {1, 1, 2}};
  for (const auto& c : cases)
    CHECK(selberg_degree(c[0], c[1], c[2]) ==
          simplex_integral(c[0], c[1], 0, c[2]));
}

TEST_CASE("Hilbert function values") {
  const Setup sp2 = setup({Family::SpR, 2, 0, 0});
  CHECK(hilbert_value(sp2.pair, sp2.seq, 1, 0) == 1);
  CHECK(hilbert_value(sp2.pair, sp2.seq, 1, 1) == 4);
  CHECK(hilbert_value(sp2.pair, sp2.seq, 0, 9) == 1);

  const Setup su23 = setup({Family::SU, 0, 2, 3});
  CHECK(hilbert_value(su23.pair, su23.seq, 1, 0) == 1);
  CHECK(hilbert_value(su23.pair, su23.seq, 1, 1) == 7);
}

TEST_CASE("Hilbert polynomial of the minimal orbit of su(2,2)") {
  const Setup s = setup({Family::SU, 0, 2, 2});
  const Poly1 h = hilbert_polynomial(s.pair, s.seq, 1);
  // h(t) = (t+1)(t+2)(2t+3)/6
  CHECK(h.degree() == 3);
  CHECK(h.leading() == rat(1, 3));
  CHECK(h.eval(rat(2)) == 14);
  CHECK(h.eval(rat(0)) == 1);
}

TEST_CASE("degrees by interpolation") {
  const Setup su23 = setup({Family::SU, 0, 2, 3});
  const OrbitGeometry g1 = degree_interpolated(su23.pair, su23.seq, 1);
  CHECK(g1.dim == 4);
  CHECK(g1.leading == rat(1, 8));
  CHECK(g1.degree == 3);
  CHECK(g1.route == "interpolation");

  const Setup sp3 = setup({Family::SpR, 3, 0, 0});
  const OrbitGeometry g2 = degree_interpolated(sp3.pair, sp3.seq, 1);
  CHECK(g2.dim == 3);
  CHECK(g2.degree == 4);

  const Setup su22 = setup({Family::SU, 0, 2, 2});
  CHECK(degree_interpolated(su22.pair, su22.seq, 1).degree == 2);
}

TEST_CASE("closed form unavailable off the standard cone") {
  const Setup su22 = setup({Family::SU, 0, 2, 2});
  CHECK_THROWS_AS((void)degree_closed(su22.pair, su22.seq, 2),
                  UnsupportedError);
}

TEST_CASE("the two degree routes agree where both run") {
  for (const PairParams& prm :
       {PairParams{Family::SU, 0, 2, 3}, PairParams{Family::SpR, 2, 0, 0},
        PairParams{Family::SpPQ, 0, 1, 2}}) {
    const Setup s = setup(prm);
    const GeometryReport rep = orbit_geometry(s.pair, s.seq, 1);
    CHECK(rep.closed_supported);
    CHECK(rep.routes_agree);
    CHECK(rep.brute.degree == rep.closed.degree);
    CHECK(rep.brute.degree > 0);
    CHECK(is_integer(rep.brute.degree));
  }
  const Setup sl5 = setup({Family::SL_R, 5, 0, 0});
  const GeometryReport rep = orbit_geometry(sl5.pair, sl5.seq, 2);
  CHECK(rep.closed_supported);
  CHECK(rep.routes_agree);
}

TEST_CASE("term budget is enforced") {
  CHECK_THROWS_AS((void)simplex_integral(2, 2, 0, 3, 5), BudgetError);
}
