#ifndef SPHORB_SYMMETRIC_PAIR_HPP
#define SPHORB_SYMMETRIC_PAIR_HPP

// The eight classical families of non-compact simple real groups handled
// here, each presented through its maximal compact subgroup K and the
// K-weights of the complexified isotropy representation p = g/k.
//
//   sl(n,R)   K = so(n)            so*(2n)  K = u(n)
//   sl(n,H)   K = sp(n)            sp(n,R)  K = u(n)
//   su(p,q)   K = s(u(p)+u(q))     sp(p,q)  K = sp(p)+sp(q)
//   so(2,q)   K = so(2)+so(q)      so(p,q)  K = so(p)+so(q)
//
// so(2,q) is kept separate from so(p,q) (p > 2) because it is Hermitian and
// its conventions differ throughout.

#include <set>
#include <string>
#include <vector>

#include "sphorb/root_system.hpp"

namespace sphorb {

enum class Family { SL_R, SL_H, SU, SO2Q, SOPQ, SOStar, SpR, SpPQ };

// CLI slugs: sl_r, sl_h, su, so2q, sopq, so_star, sp_r, sp_pq.
Family family_from_slug(const std::string& slug);
std::string family_slug(Family f);

struct PairParams {
  Family family;
  int n = 0;  // sl(n,R), sl(n,H), so*(2n), sp(n,R)
  int p = 0;  // su(p,q), so(p,q), sp(p,q)
  int q = 0;  // ... and so(2,q)
};

class SymmetricPair {
 public:
  explicit SymmetricPair(const PairParams& params);

  const PairParams& params() const { return params_; }
  const std::string& name() const { return name_; }
  const RootSystem& k() const { return k_; }

  // Nonzero weights of p, each of multiplicity one, sorted.
  const std::vector<Weight>& p_weights() const { return p_weights_; }
  int p_zero_multiplicity() const { return p_zero_mult_; }
  long dim_p() const {
    return static_cast<long>(p_weights_.size()) + p_zero_mult_;
  }

  bool hermitian() const { return hermitian_; }
  // Central direction with p_+ = { w : <w, center> > 0 }; Hermitian only.
  const Weight& center() const;
  bool in_p_plus(const Weight& w) const;

  bool is_p_weight(const Weight& w) const {  // nonzero weights only
    return p_set_.count(w) != 0;
  }

  // Highest weight of p (of p_+ in the Hermitian case).
  const Weight& highest_p_weight() const { return beta_; }

  int rank_k() const { return k_.ambient_dim(); }
  int real_rank() const { return real_rank_; }

  // "e1 + f2", "2u1", "e0 - f1", ...
  std::string display(const Weight& w) const;

  // Decomposition over the simple factors: fundamental-weight coefficients
  // per block plus the block's central charge (A and Torus blocks only).
  struct FundamentalPart {
    std::string block_label;
    std::vector<Rat> coeffs;  // one per node of the block's Dynkin diagram
    Rat central;              // 0 for semisimple blocks
  };
  std::vector<FundamentalPart> fundamental_parts(const Weight& w) const;

 private:
  PairParams params_;
  std::string name_;
  RootSystem k_;
  std::vector<Weight> p_weights_;
  std::set<Weight, WeightLess> p_set_;
  int p_zero_mult_ = 0;
  bool hermitian_ = false;
  Weight center_;
  Weight beta_;
  int real_rank_ = 0;
};

SymmetricPair make_pair(const PairParams& params);

}  // namespace sphorb

#endif
