#include <algorithm>
#include <set>

#include "doctest.h"
#include "sphorb/errors.hpp"
#include "sphorb/sequences.hpp"

using namespace sphorb;

namespace {

std::set<std::string> labels_of(const std::vector<SOSequence>& seqs) {
  std::set<std::string> out;
  for (const SOSequence& s : seqs) out.insert(s.label);
  return out;
}

Weight ei(int dim, int i, long c = 1) { return basis_weight(dim, i, rat(c)); }

}  // namespace

TEST_CASE("sp(2,R): one principal sequence 2e1, 2e2") {
  const SymmetricPair pair = make_pair({Family::SpR, 2, 0, 0});
  const auto seqs = maximal_sequences(pair);
  REQUIRE(seqs.size() == 1);
  CHECK(seqs[0].label == "principal");
  REQUIRE(seqs[0].length() == 2);
  CHECK(seqs[0].gammas[0] == ei(2, 0, 2));
  CHECK(seqs[0].gammas[1] == ei(2, 1, 2));
  CHECK(seqs[0].coroot_value(0, ei(2, 0, 2)) == 2);
  CHECK(seqs[0].coroot_value(1, ei(2, 0, 2)) == 0);
  CHECK(seqs[0].partial_sum(2) == Weight{rat(2), rat(2)});
  CHECK(sequence_length_law(pair) == 2);
}

TEST_CASE("su(2,3): gamma_i = e_i - f_(q+1-i)") {
  const SymmetricPair pair = make_pair({Family::SU, 0, 2, 3});
  const auto seqs = maximal_sequences(pair);
  REQUIRE(seqs.size() == 1);
  REQUIRE(seqs[0].length() == 2);
  CHECK(pair.display(seqs[0].gammas[0]) == "e1 - f3");
  CHECK(pair.display(seqs[0].gammas[1]) == "e2 - f2");
  CHECK(sequence_length_law(pair) == 2);
}

TEST_CASE("sl(2k,R) branches at the last step") {
  const SymmetricPair pair = make_pair({Family::SL_R, 4, 0, 0});
  const auto seqs = maximal_sequences(pair);
  REQUIRE(seqs.size() == 2);
  CHECK(labels_of(seqs) == std::set<std::string>{"sigma(+)", "sigma(-)"});
  for (const SOSequence& s : seqs) {
    REQUIRE(s.length() == 2);
    CHECK(s.gammas[0] == ei(2, 0, 2));
    CHECK((s.gammas[1] == ei(2, 1, 2) || s.gammas[1] == ei(2, 1, -2)));
  }
  CHECK(sequence_length_law(pair) == 2);
}

TEST_CASE("sl(2k+1,R) has a single chain") {
  const SymmetricPair pair = make_pair({Family::SL_R, 5, 0, 0});
  const auto seqs = maximal_sequences(pair);
  REQUIRE(seqs.size() == 1);
  CHECK(seqs[0].label == "principal");
  REQUIRE(seqs[0].length() == 2);
  CHECK(seqs[0].gammas[0] == ei(2, 0, 2));
  CHECK(seqs[0].gammas[1] == ei(2, 1, 2));
}

TEST_CASE("sl(n,H): shorter than the rank bound") {
  const SymmetricPair pair2 = make_pair({Family::SL_H, 2, 0, 0});
  const auto seqs2 = maximal_sequences(pair2);
  REQUIRE(seqs2.size() == 1);
  CHECK(seqs2[0].length() == 1);
  CHECK(seqs2[0].gammas[0] == add(ei(2, 0), ei(2, 1)));
  CHECK(sequence_length_law(pair2) == 1);

  const SymmetricPair pair3 = make_pair({Family::SL_H, 3, 0, 0});
  const auto seqs3 = maximal_sequences(pair3);
  REQUIRE(seqs3.size() == 1);
  CHECK(seqs3[0].length() == 1);  // floor(3/2), not min(rank, real rank) = 2
  CHECK(sequence_length_law(pair3) == 1);
}

TEST_CASE("so(3,4): two tau branches only") {
  const SymmetricPair pair = make_pair({Family::SOPQ, 0, 3, 4});
  const auto seqs = maximal_sequences(pair);
  REQUIRE(seqs.size() == 2);
  CHECK(labels_of(seqs) == std::set<std::string>{"tau(+)", "tau(-)"});
  for (const SOSequence& s : seqs) {
    REQUIRE(s.length() == 2);
    // both gammas are supported on e1 and f1 alone
    for (const Weight& g : s.gammas) {
      CHECK(g[0] != 0);
      CHECK(g[1] != 0);
      CHECK(g[2] == 0);
    }
  }
  CHECK(sequence_length_law(pair) == 3);  // upper bound, not attained
}

TEST_CASE("so(4,4): full census of six sequences") {
  const SymmetricPair pair = make_pair({Family::SOPQ, 0, 4, 4});
  const auto seqs = maximal_sequences(pair);
  CHECK(seqs.size() == 6);
  long sigma = 0, tau = 0;
  for (const SOSequence& s : seqs) {
    if (s.label.rfind("sigma", 0) == 0) {
      ++sigma;
      CHECK(s.length() == 2);
    } else {
      ++tau;
      CHECK(s.length() == 2);
    }
  }
  CHECK(sigma == 4);
  CHECK(tau == 2);
}

TEST_CASE("so(5,6): one sigma and two tau branches") {
  // With floor(6/2) = 3 coordinates on the f side but only two gammas, a
  // sign flip in an f coordinate is undone by a Weyl reflection through the
  // unused third coordinate, so the sigma branch is unique up to
  // conjugacy.  (Contrast so(4,4), where every coordinate is used.)
  const SymmetricPair pair = make_pair({Family::SOPQ, 0, 5, 6});
  const auto seqs = maximal_sequences(pair);
  CHECK(seqs.size() == 3);
  long sigma = 0, tau = 0;
  for (const SOSequence& s : seqs) {
    if (s.label.rfind("sigma", 0) == 0) {
      ++sigma;
      CHECK(s.length() == 2);  // floor(5/2)
    } else {
      ++tau;
      CHECK(s.length() == 2);
    }
  }
  CHECK(sigma == 1);
  CHECK(tau == 2);
}

TEST_CASE("hermitian families have one sequence of full real rank") {
  for (const PairParams& prm :
       {PairParams{Family::SO2Q, 0, 2, 5}, PairParams{Family::SO2Q, 0, 2, 6},
        PairParams{Family::SOStar, 3, 0, 0},
        PairParams{Family::SOStar, 4, 0, 0},
        PairParams{Family::SpPQ, 0, 2, 2}}) {
    const SymmetricPair pair = make_pair(prm);
    const auto seqs = maximal_sequences(pair);
    REQUIRE(seqs.size() == 1);
    CHECK(static_cast<int>(seqs[0].length()) == sequence_length_law(pair));
  }
}

TEST_CASE("strong orthogonality includes the zero-sum guard") {
  const SymmetricPair pair = make_pair({Family::SU, 0, 2, 2});
  const Weight g1 = pair.highest_p_weight();
  // g1 - g1 = 0 counts as a present weight, so -g1 is never admissible
  CHECK(!strongly_orthogonal(g1, neg(g1), pair));
  // e2 - f1 is genuinely strongly orthogonal to e1 - f2
  Weight g2 = zero_weight(4);
  g2[1] = 1;
  g2[2] = -1;
  CHECK(strongly_orthogonal(g1, g2, pair));
  // e2 - f2 is not: the difference e1 - e2 is a compact root
  Weight bad = zero_weight(4);
  bad[1] = 1;
  bad[3] = -1;
  CHECK(!strongly_orthogonal(g1, bad, pair));
}

TEST_CASE("extend_candidates on the empty prefix is the highest weight") {
  const SymmetricPair pair = make_pair({Family::SpR, 3, 0, 0});
  const auto cands = extend_candidates(pair, {});
  REQUIRE(cands.size() == 1);
  CHECK(cands[0] == pair.highest_p_weight());
}

TEST_CASE("partial sums stay dominant along every sequence") {
  for (const PairParams& prm :
       {PairParams{Family::SOPQ, 0, 4, 4}, PairParams{Family::SL_R, 4, 0, 0},
        PairParams{Family::SpPQ, 0, 1, 2}}) {
    const SymmetricPair pair = make_pair(prm);
    for (const SOSequence& s : maximal_sequences(pair))
      for (std::size_t i = 1; i <= s.length(); ++i)
        CHECK(pair.k().is_dominant(s.partial_sum(i)));
  }
}
