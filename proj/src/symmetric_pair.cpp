#include "sphorb/symmetric_pair.hpp"

#include <algorithm>
#include <sstream>

#include "sphorb/errors.hpp"

namespace sphorb {

Family family_from_slug(const std::string& slug) {
  if (slug == "sl_r") return Family::SL_R;
  if (slug == "sl_h") return Family::SL_H;
  if (slug == "su") return Family::SU;
  if (slug == "so2q") return Family::SO2Q;
  if (slug == "sopq") return Family::SOPQ;
  if (slug == "so_star") return Family::SOStar;
  if (slug == "sp_r") return Family::SpR;
  if (slug == "sp_pq") return Family::SpPQ;
  throw ParamError("unknown family slug: " + slug);
}

std::string family_slug(Family f) {
  switch (f) {
    case Family::SL_R: return "sl_r";
    case Family::SL_H: return "sl_h";
    case Family::SU: return "su";
    case Family::SO2Q: return "so2q";
    case Family::SOPQ: return "sopq";
    case Family::SOStar: return "so_star";
    case Family::SpR: return "sp_r";
    case Family::SpPQ: return "sp_pq";
  }
  throw ParamError("unknown family");
}

namespace {

BlockType orthogonal_block(int size) {
  return size % 2 ? BlockType::B : BlockType::D;
}

long expected_dim_p(const PairParams& pr) {
  switch (pr.family) {
    case Family::SL_R: return static_cast<long>(pr.n) * (pr.n + 1) / 2 - 1;
    case Family::SL_H: return 2L * pr.n * pr.n - pr.n - 1;
    case Family::SU: return 2L * pr.p * pr.q;
    case Family::SO2Q: return 2L * pr.q;
    case Family::SOPQ: return static_cast<long>(pr.p) * pr.q;
    case Family::SOStar: return static_cast<long>(pr.n) * (pr.n - 1);
    case Family::SpR: return static_cast<long>(pr.n) * (pr.n + 1);
    case Family::SpPQ: return 4L * pr.p * pr.q;
  }
  throw ParamError("unknown family");
}

}  // namespace

SymmetricPair::SymmetricPair(const PairParams& params) : params_(params) {
  const int n = params.n, p = params.p, q = params.q;
  std::ostringstream nm;
  std::vector<Block> blocks;
  int dim = 0;
  auto both_signs = [&](const Weight& w) {
    p_weights_.push_back(w);
    p_weights_.push_back(neg(w));
  };

  switch (params.family) {
    case Family::SL_R: {
      if (n < 3) throw ParamError("sl(n,R) requires n >= 3");
      nm << "sl(" << n << ",R)";
      const int m = n / 2;
      dim = m;
      blocks.push_back({orthogonal_block(n), m, 0, "e"});
      real_rank_ = n - 1;
      auto e = [&](int i) { return basis_weight(dim, i); };
      for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
          both_signs(add(e(i), e(j)));
          both_signs(sub(e(i), e(j)));
        }
        both_signs(scale(2, e(i)));
        if (n % 2) both_signs(e(i));
      }
      p_zero_mult_ = (n % 2) ? m : m - 1;
      break;
    }
    case Family::SL_H: {
      if (n < 2) throw ParamError("sl(n,H) requires n >= 2");
      nm << "sl(" << n << ",H)";
      dim = n;
      blocks.push_back({BlockType::C, n, 0, "u"});
      real_rank_ = n - 1;
      auto u = [&](int i) { return basis_weight(dim, i); };
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          both_signs(add(u(i), u(j)));
          both_signs(sub(u(i), u(j)));
        }
      p_zero_mult_ = n - 1;
      break;
    }
    case Family::SU: {
      if (!(2 <= p && p <= q)) throw ParamError("su(p,q) requires 2 <= p <= q");
      nm << "su(" << p << "," << q << ")";
      dim = p + q;
      blocks.push_back({BlockType::A, p, 0, "e"});
      blocks.push_back({BlockType::A, q, p, "f"});
      real_rank_ = p;
      hermitian_ = true;
      center_ = zero_weight(dim);
      for (int i = 0; i < p; ++i) center_[i] = q;
      for (int j = 0; j < q; ++j) center_[p + j] = -p;
      for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j)
          both_signs(sub(basis_weight(dim, i), basis_weight(dim, p + j)));
      break;
    }
    case Family::SO2Q: {
      if (q <= 2) throw ParamError("so(2,q) requires q > 2");
      nm << "so(2," << q << ")";
      const int m = q / 2;
      dim = 1 + m;
      blocks.push_back({BlockType::Torus, 1, 0, "e", 0});
      blocks.push_back({orthogonal_block(q), m, 1, "f"});
      real_rank_ = 2;
      hermitian_ = true;
      center_ = basis_weight(dim, 0);
      for (int j = 0; j < m; ++j) {
        both_signs(add(basis_weight(dim, 0), basis_weight(dim, 1 + j)));
        both_signs(sub(basis_weight(dim, 0), basis_weight(dim, 1 + j)));
      }
      if (q % 2) both_signs(basis_weight(dim, 0));
      break;
    }
    case Family::SOPQ: {
      if (!(2 < p && p <= q)) throw ParamError("so(p,q) requires 2 < p <= q");
      nm << "so(" << p << "," << q << ")";
      const int mp = p / 2, mq = q / 2;
      dim = mp + mq;
      blocks.push_back({orthogonal_block(p), mp, 0, "e"});
      blocks.push_back({orthogonal_block(q), mq, mp, "f"});
      real_rank_ = p;
      for (int i = 0; i < mp; ++i)
        for (int j = 0; j < mq; ++j) {
          both_signs(add(basis_weight(dim, i), basis_weight(dim, mp + j)));
          both_signs(sub(basis_weight(dim, i), basis_weight(dim, mp + j)));
        }
      if (p % 2)
        for (int j = 0; j < mq; ++j) both_signs(basis_weight(dim, mp + j));
      if (q % 2)
        for (int i = 0; i < mp; ++i) both_signs(basis_weight(dim, i));
      p_zero_mult_ = (p % 2 && q % 2) ? 1 : 0;
      break;
    }
    case Family::SOStar: {
      if (n < 3) throw ParamError("so*(2n) requires n >= 3");
      nm << "so*(" << 2 * n << ")";
      dim = n;
      blocks.push_back({BlockType::A, n, 0, "e"});
      real_rank_ = n / 2;
      hermitian_ = true;
      center_ = Weight(dim, Rat(1));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          both_signs(add(basis_weight(dim, i), basis_weight(dim, j)));
      break;
    }
    case Family::SpR: {
      if (n < 2) throw ParamError("sp(n,R) requires n >= 2");
      nm << "sp(" << n << ",R)";
      dim = n;
      blocks.push_back({BlockType::A, n, 0, "e"});
      real_rank_ = n;
      hermitian_ = true;
      center_ = Weight(dim, Rat(1));
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
          both_signs(add(basis_weight(dim, i), basis_weight(dim, j)));
      break;
    }
    case Family::SpPQ: {
      if (!(1 <= p && p <= q)) throw ParamError("sp(p,q) requires 1 <= p <= q");
      nm << "sp(" << p << "," << q << ")";
      dim = p + q;
      blocks.push_back({BlockType::C, p, 0, "u"});
      blocks.push_back({BlockType::C, q, p, "v"});
      real_rank_ = p;
      for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j) {
          both_signs(add(basis_weight(dim, i), basis_weight(dim, p + j)));
          both_signs(sub(basis_weight(dim, i), basis_weight(dim, p + j)));
        }
      break;
    }
  }

  name_ = nm.str();
  k_ = RootSystem(blocks, dim);
  std::sort(p_weights_.begin(), p_weights_.end(), WeightLess{});
  p_set_.insert(p_weights_.begin(), p_weights_.end());

  // Internal consistency: multiplicity-one nonzero weights, stability under
  // negation, and the classical dimension count for g/k.
  if (p_set_.size() != p_weights_.size())
    throw ContractError(name_ + ": repeated nonzero weight in p");
  for (const Weight& w : p_weights_)
    if (!p_set_.count(neg(w)))
      throw ContractError(name_ + ": p-weights not stable under negation");
  if (dim_p() != expected_dim_p(params_))
    throw ContractError(name_ + ": dim p mismatch");

  // Highest weight of p (restricted to p_+ in the Hermitian case): the unique
  // dominant weight that cannot be raised by any positive root within the
  // weight set (counting the zero weight when present).
  beta_ = Weight();
  for (const Weight& w : p_weights_) {
    if (hermitian_ && !in_p_plus(w)) continue;
    if (!k_.is_dominant(w)) continue;
    bool raisable = false;
    for (const Weight& a : k_.positive_roots()) {
      Weight up = add(w, a);
      if (p_set_.count(up) || (p_zero_mult_ > 0 && is_zero(up))) {
        raisable = true;
        break;
      }
    }
    if (!raisable) {
      if (!beta_.empty())
        throw ContractError(name_ + ": highest weight of p not unique");
      beta_ = w;
    }
  }
  if (beta_.empty()) throw ContractError(name_ + ": no highest weight in p");
}

const Weight& SymmetricPair::center() const {
  if (!hermitian_) throw ContractError(name_ + " is not Hermitian");
  return center_;
}

bool SymmetricPair::in_p_plus(const Weight& w) const {
  return dot(w, center()) > 0;
}

std::string SymmetricPair::display(const Weight& w) const {
  std::ostringstream os;
  bool first = true;
  for (const Block& b : k_.blocks()) {
    for (int i = 0; i < b.rank; ++i) {
      const Rat& c = w[b.offset + i];
      if (c == 0) continue;
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      Rat a = abs(c);
      if (a != 1) {
        if (is_integer(a))
          os << a.get_str();
        else
          os << "(" << a.get_str() << ")";
      }
      os << b.label << (b.index_base + i);
      first = false;
    }
  }
  return first ? "0" : os.str();
}

std::vector<SymmetricPair::FundamentalPart> SymmetricPair::fundamental_parts(
    const Weight& w) const {
  std::vector<FundamentalPart> parts;
  for (const Block& b : k_.blocks()) {
    FundamentalPart part;
    part.block_label = b.label;
    part.central = 0;
    const int m = b.rank;
    auto c = [&](int i) { return w[b.offset + i]; };
    switch (b.type) {
      case BlockType::Torus:
        part.central = c(0);
        break;
      case BlockType::A:
        for (int i = 0; i + 1 < m; ++i) part.coeffs.push_back(c(i) - c(i + 1));
        for (int i = 0; i < m; ++i) part.central += c(i);
        break;
      case BlockType::B:
        for (int i = 0; i + 1 < m; ++i) part.coeffs.push_back(c(i) - c(i + 1));
        part.coeffs.push_back(2 * c(m - 1));
        break;
      case BlockType::C:
        for (int i = 0; i + 1 < m; ++i) part.coeffs.push_back(c(i) - c(i + 1));
        part.coeffs.push_back(c(m - 1));
        break;
      case BlockType::D:
        if (m >= 2) {
          for (int i = 0; i + 2 < m; ++i)
            part.coeffs.push_back(c(i) - c(i + 1));
          part.coeffs.push_back(c(m - 2) - c(m - 1));
          part.coeffs.push_back(c(m - 2) + c(m - 1));
        }
        break;
    }
    parts.push_back(std::move(part));
  }
  return parts;
}

SymmetricPair make_pair(const PairParams& params) {
  return SymmetricPair(params);
}

}  // namespace sphorb
