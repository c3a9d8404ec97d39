#include "sphorb/sequences.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "sphorb/errors.hpp"

namespace sphorb {

Rat SOSequence::coroot_value(std::size_t j, const Weight& w) const {
  const Weight& g = gammas.at(j);
  return 2 * dot(w, g) / dot(g, g);
}

Weight SOSequence::partial_sum(std::size_t i) const {
  Weight s = zero_weight(gammas.at(0).size());
  for (std::size_t j = 0; j < i; ++j) s = add(s, gammas[j]);
  return s;
}

bool strongly_orthogonal(const Weight& g1, const Weight& g2,
                         const SymmetricPair& pair) {
  Weight sum = add(g1, g2);
  Weight diff = sub(g1, g2);
  for (const Weight* w : {&sum, &diff}) {
    if (is_zero(*w)) return false;
    if (pair.k().is_root(*w)) return false;
    if (pair.is_p_weight(*w)) return false;
  }
  return true;
}

namespace {

std::vector<Weight> candidates_in_orbit(const SymmetricPair& pair,
                                        const std::vector<Weight>& orbit,
                                        const std::vector<Weight>& prefix) {
  std::vector<Weight> out;
  Weight sum = zero_weight(pair.rank_k());
  for (const Weight& g : prefix) sum = add(sum, g);
  for (const Weight& cand : orbit) {
    if (prefix.empty()) {
      if (lex_compare(cand, pair.highest_p_weight()) == 0) out.push_back(cand);
      continue;
    }
    bool ok = true;
    for (const Weight& g : prefix) {
      if (!strongly_orthogonal(g, cand, pair)) {
        ok = false;
        break;
      }
    }
    if (ok && pair.k().is_dominant(add(sum, cand))) out.push_back(cand);
  }
  return out;  // orbit is sorted, so candidates come out in lex order
}

std::string sign_char(const Rat& x) { return x > 0 ? "+" : "-"; }

// Branch labels: unique sequences are "principal"; the SL(2k,R) pair is told
// apart by the sign of the final gamma; SO(p,q) sequences split into the
// sigma family (fresh coordinates each step, named by the final element's
// sign pattern) and the tau family (two weights on one coordinate pair).
std::string label_sequence(const SymmetricPair& pair,
                           const std::vector<Weight>& gammas,
                           bool unique) {
  const Family f = pair.params().family;
  if (f == Family::SL_R && !unique) {
    const Weight& last = gammas.back();
    for (const Rat& c : last)
      if (c != 0) return "sigma(" + sign_char(c) + ")";
  }
  if (f == Family::SOPQ) {
    std::set<std::size_t> support;
    for (const Weight& g : gammas)
      for (std::size_t i = 0; i < g.size(); ++i)
        if (g[i] != 0) support.insert(i);
    if (gammas.size() == 2 && support.size() == 2)
      return "tau(" + sign_char(gammas[1][0]) + ")";
    const Weight& last = gammas.back();
    std::string se, sf;
    const int mp = pair.params().p / 2;
    for (int i = 0; i < mp; ++i)
      if (last[i] != 0) se = sign_char(last[i]);
    for (std::size_t i = mp; i < last.size(); ++i)
      if (last[i] != 0) sf = sign_char(last[i]);
    return "sigma(" + se + "," + sf + ")";
  }
  return "principal";
}

}  // namespace

std::vector<Weight> extend_candidates(const SymmetricPair& pair,
                                      const std::vector<Weight>& prefix) {
  std::vector<Weight> orbit = pair.k().weyl_orbit(pair.highest_p_weight());
  return candidates_in_orbit(pair, orbit, prefix);
}

std::vector<SOSequence> maximal_sequences(const SymmetricPair& pair) {
  std::vector<Weight> orbit = pair.k().weyl_orbit(pair.highest_p_weight());
  std::vector<std::vector<Weight>> found;
  std::vector<Weight> prefix;

  std::function<void()> dfs = [&]() {
    std::vector<Weight> cands = candidates_in_orbit(pair, orbit, prefix);
    if (cands.empty()) {
      found.push_back(prefix);
      return;
    }
    for (const Weight& c : cands) {
      prefix.push_back(c);
      dfs();
      prefix.pop_back();
    }
  };
  dfs();

  std::sort(found.begin(), found.end(),
            [](const std::vector<Weight>& a, const std::vector<Weight>& b) {
              if (a.size() != b.size()) return a.size() > b.size();
              for (std::size_t i = 0; i < a.size(); ++i) {
                int c = lex_compare(a[i], b[i]);
                if (c != 0) return c > 0;
              }
              return false;
            });
  found.erase(std::unique(found.begin(), found.end()), found.end());

  std::vector<SOSequence> out;
  for (const std::vector<Weight>& g : found) {
    SOSequence s;
    s.gammas = g;
    s.label = label_sequence(pair, g, found.size() == 1);
    out.push_back(std::move(s));
  }
  return out;
}

int sequence_length_law(const SymmetricPair& pair) {
  if (pair.params().family == Family::SL_H) return pair.params().n / 2;
  return std::min(pair.rank_k(), pair.real_rank());
}

}  // namespace sphorb
