#include "sphorb/hilbert.hpp"

#include <algorithm>
#include <utility>

#include "sphorb/errors.hpp"

namespace sphorb {

long Poly1::degree() const {
  for (long k = static_cast<long>(coeffs.size()) - 1; k >= 0; --k)
    if (coeffs[k] != 0) return k;
  return -1;
}

Rat Poly1::leading() const {
  const long d = degree();
  return d < 0 ? Rat(0) : coeffs[d];
}

Rat Poly1::eval(const Rat& t) const {
  Rat acc(0);
  for (long k = static_cast<long>(coeffs.size()) - 1; k >= 0; --k)
    acc = acc * t + coeffs[k];
  return acc;
}

Poly1 interpolate(const std::vector<long>& ts, const std::vector<Rat>& values) {
  const std::size_t m = ts.size();
  if (m == 0 || values.size() != m)
    throw ParamError("interpolate: need matching, nonempty node/value lists");
  // Vandermonde system, solved by exact Gaussian elimination.  Sizes here
  // are tiny (degree <= orbit dimension), so no pivoting strategy needed
  // beyond "find a nonzero".
  std::vector<std::vector<Rat>> mat(m, std::vector<Rat>(m + 1));
  for (std::size_t r = 0; r < m; ++r) {
    Rat pw(1);
    const Rat t(ts[r]);
    for (std::size_t c = 0; c < m; ++c) {
      mat[r][c] = pw;
      pw *= t;
    }
    mat[r][m] = values[r];
  }
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = col;
    while (piv < m && mat[piv][col] == 0) ++piv;
    if (piv == m) throw ContractError("interpolate: singular node matrix");
    std::swap(mat[piv], mat[col]);
    const Rat inv = Rat(1) / mat[col][col];
    for (std::size_t c = col; c <= m; ++c) mat[col][c] *= inv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == col || mat[r][col] == 0) continue;
      const Rat f = mat[r][col];
      for (std::size_t c = col; c <= m; ++c) mat[r][c] -= f * mat[col][c];
    }
  }
  Poly1 p;
  p.coeffs.resize(m);
  for (std::size_t r = 0; r < m; ++r) p.coeffs[r] = mat[r][m];
  return p;
}

std::vector<Rat> bernoulli_plus(long m) {
  if (m < 0) throw ParamError("bernoulli_plus: m must be nonnegative");
  std::vector<Rat> b(static_cast<std::size_t>(m) + 1);
  b[0] = 1;
  for (long k = 1; k <= m; ++k) {
    Rat acc(0);
    for (long j = 0; j < k; ++j)
      acc += Rat(binomial(k + 1, j)) * b[static_cast<std::size_t>(j)];
    b[static_cast<std::size_t>(k)] = -acc / Rat(k + 1);
  }
  if (m >= 1) b[1] = rat(1, 2);
  return b;
}

Poly1 faulhaber_polynomial(long p) {
  if (p < 0) throw ParamError("faulhaber_polynomial: p must be nonnegative");
  const std::vector<Rat> b = bernoulli_plus(p);
  Poly1 s;
  s.coeffs.assign(static_cast<std::size_t>(p) + 2, Rat(0));
  for (long j = 0; j <= p; ++j)
    s.coeffs[static_cast<std::size_t>(p + 1 - j)] =
        Rat(binomial(p + 1, j)) * b[static_cast<std::size_t>(j)] / Rat(p + 1);
  if (p == 0) s.coeffs[0] += 1;  // the k = 0 term, with 0^0 = 1
  return s;
}

Rat faulhaber_sum(long p, long t) {
  if (t < 0) throw ParamError("faulhaber_sum: t must be nonnegative");
  return faulhaber_polynomial(p).eval(Rat(t));
}

namespace {

struct Budget {
  long long used = 0;
  long long limit = kDefaultTermBudget;
  void tick(long long n = 1) {
    used += n;
    if (used > limit)
      throw BudgetError("expansion exceeded the term budget of " +
                        std::to_string(limit));
  }
};

MPoly mul_linear(const MPoly& p, const std::vector<Rat>& coeff, Budget& bud) {
  MPoly q;
  for (const auto& [e, v] : p) {
    for (std::size_t j = 0; j < coeff.size(); ++j) {
      if (coeff[j] == 0) continue;
      bud.tick();
      ExpVec f = e;
      f[j] += 1;
      q[f] += coeff[j] * v;
    }
  }
  return q;
}

MPoly mul_sparse(const MPoly& p, const MPoly& s, Budget& bud) {
  MPoly q;
  for (const auto& [e, v] : p) {
    for (const auto& [d, w] : s) {
      bud.tick();
      ExpVec f = e;
      for (std::size_t j = 0; j < f.size(); ++j) f[j] += d[j];
      q[f] += v * w;
    }
  }
  return q;
}

// integral over { y >= 0, sum_k (k+1) y_k <= 1 } of prod y_k^{c_k}:
// substitute z_k = (k+1) y_k and apply the Dirichlet integral on the
// standard simplex.
Rat dirichlet_value(const ExpVec& c) {
  Int num(1), den(1);
  long total = 0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    num *= factorial(c[k]);
    Int pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(k + 1),
                  static_cast<unsigned long>(c[k] + 1));
    den *= pw;
    total += c[k];
  }
  den *= factorial(total + static_cast<long>(c.size()));
  return Rat(num) / Rat(den);
}

}  // namespace

Rat ordered_simplex_integral(const MPoly& f, long i, long long term_budget) {
  if (i < 0) throw ParamError("ordered_simplex_integral: i must be >= 0");
  if (i == 0) {
    Rat acc(0);
    for (const auto& [e, v] : f) acc += v;
    return acc;
  }
  Budget bud;
  bud.limit = term_budget;
  Rat total(0);
  // Substitute x_j = y_j + y_{j+1} + ... + y_{i-1}; the ordered simplex in x
  // becomes { y >= 0, sum (k+1) y_k <= 1 } with unit Jacobian.
  for (const auto& [e, v] : f) {
    MPoly expanded;
    expanded[ExpVec(static_cast<std::size_t>(i), 0)] = v;
    for (long j = 0; j < i; ++j) {
      if (e[static_cast<std::size_t>(j)] == 0) continue;
      std::vector<Rat> form(static_cast<std::size_t>(i), Rat(0));
      for (long k = j; k < i; ++k) form[static_cast<std::size_t>(k)] = 1;
      for (int rep = 0; rep < e[static_cast<std::size_t>(j)]; ++rep)
        expanded = mul_linear(expanded, form, bud);
    }
    for (const auto& [c, w] : expanded) total += w * dirichlet_value(c);
  }
  return total;
}

Rat simplex_integral(long q, long r, long s, long i, long long term_budget) {
  if (q < 0 || r < 0 || s < 0)
    throw ParamError("simplex_integral: exponents must be nonnegative");
  if (i < 0) throw ParamError("simplex_integral: i must be >= 0");
  if (i == 0) return Rat(1);
  Budget bud;
  bud.limit = term_budget;
  const std::size_t nv = static_cast<std::size_t>(i);
  MPoly f;
  {
    // prod_j x_j^q as a single starting monomial.
    ExpVec e(nv, static_cast<int>(q));
    f[e] = 1;
  }
  for (long j = 0; j < i; ++j) {
    for (long k = j + 1; k < i; ++k) {
      if (r > 0) {
        std::vector<Rat> form(nv, Rat(0));
        form[static_cast<std::size_t>(j)] = 1;
        form[static_cast<std::size_t>(k)] = -1;
        for (long rep = 0; rep < r; ++rep) f = mul_linear(f, form, bud);
      }
      if (s > 0) {
        MPoly quad;
        ExpVec ej(nv, 0), ek(nv, 0);
        ej[static_cast<std::size_t>(j)] = 2;
        ek[static_cast<std::size_t>(k)] = 2;
        quad[ej] = 1;
        quad[ek] = -1;
        for (long rep = 0; rep < s; ++rep) f = mul_sparse(f, quad, bud);
      }
    }
  }
  return ordered_simplex_integral(f, i, term_budget);
}

namespace {

// Exact gamma at integer or half-integer arguments: value is mant * pi^(1/2)
// when half is set.  Gamma(m + 1/2) = (2m)! / (4^m m!) * sqrt(pi).
struct GammaVal {
  Rat mant;
  bool half = false;
};

GammaVal gamma_exact(const Rat& z) {
  if (z <= 0) throw ParamError("gamma_exact: argument must be positive");
  const Int den = z.get_den();
  if (den == 1) {
    const long m = static_cast<long>(z.get_num().get_si());
    return {Rat(factorial(m - 1)), false};
  }
  if (den == 2) {
    const Rat mr = z - rat(1, 2);
    const long m = static_cast<long>(mr.get_num().get_si());
    Int four_m;
    mpz_ui_pow_ui(four_m.get_mpz_t(), 4, static_cast<unsigned long>(m));
    return {Rat(factorial(2 * m)) / Rat(four_m * factorial(m)), true};
  }
  throw ParamError("gamma_exact: argument must be integer or half-integer");
}

}  // namespace

Rat selberg_degree(long q, long r, long i) {
  if (q < 0 || r < 0) throw ParamError("selberg_degree: q, r must be >= 0");
  if (i < 0) throw ParamError("selberg_degree: i must be >= 0");
  if (i == 0) return Rat(1);
  const Rat half_r = rat(r, 2);
  Rat mant(1);
  int sqrt_pi = 0;
  const GammaVal g_base = gamma_exact(Rat(1) + half_r);
  for (long j = 0; j < i; ++j) {
    const GammaVal g1 = gamma_exact(Rat(q + 1) + Rat(j) * half_r);
    const GammaVal g2 = gamma_exact(Rat(1) + Rat(j + 1) * half_r);
    mant *= g1.mant * g2.mant / g_base.mant;
    sqrt_pi += (g1.half ? 1 : 0) + (g2.half ? 1 : 0) - (g_base.half ? 1 : 0);
  }
  if (sqrt_pi != 0)
    throw ContractError("selberg_degree: sqrt(pi) factors failed to cancel");
  const long d = q * i + r * i * (i - 1) / 2;
  return mant / (Rat(factorial(i)) * Rat(factorial(d + i)));
}

namespace {

Int hilbert_value_for_spec(const SymmetricPair& pair, const SOSequence& seq,
                           const LatticeSpec& spec, long t) {
  Int total(0);
  for (const CoeffTuple& a : filtration_layer(spec, t)) {
    const Weight lambda = tuple_weight(seq, a);
    total += pair.k().irrep_dim(lambda);
  }
  return total;
}

}  // namespace

Int hilbert_value(const SymmetricPair& pair, const SOSequence& seq, long i,
                  long t) {
  if (t < 0) throw ParamError("hilbert_value: t must be nonnegative");
  if (i == 0) return Int(1);
  const RestrictedSystem rs = restrict_roots(pair, seq);
  return hilbert_value_for_spec(pair, seq, lattice_spec(rs, i), t);
}

Poly1 hilbert_polynomial(const SymmetricPair& pair, const SOSequence& seq,
                         long i) {
  if (i == 0) return Poly1{{Rat(1)}};
  const RestrictedSystem rs = restrict_roots(pair, seq);
  const LatticeSpec spec = lattice_spec(rs, i);
  const long dim = dimension_formula(rs, i);
  const long t0 = dim + 2;
  std::vector<long> ts;
  std::vector<Rat> vals;
  for (long t = t0; t <= t0 + dim; ++t) {
    ts.push_back(t);
    vals.emplace_back(hilbert_value_for_spec(pair, seq, spec, t));
  }
  const Poly1 p = interpolate(ts, vals);
  for (long t = t0 + dim + 1; t <= t0 + dim + 3; ++t) {
    if (p.eval(Rat(t)) != Rat(hilbert_value_for_spec(pair, seq, spec, t)))
      throw ContractError(
          "hilbert_polynomial: interpolant fails verification at t = " +
          std::to_string(t));
  }
  return p;
}

OrbitGeometry degree_interpolated(const SymmetricPair& pair,
                                  const SOSequence& seq, long i) {
  const Poly1 p = hilbert_polynomial(pair, seq, i);
  OrbitGeometry g;
  g.route = "interpolation";
  g.dim = p.degree();
  g.leading = p.leading();
  g.degree = g.leading * Rat(factorial(g.dim));
  return g;
}

OrbitGeometry degree_closed(const SymmetricPair& pair, const SOSequence& seq,
                            long i, long long term_budget) {
  if (i == 0) {
    OrbitGeometry g;
    g.route = "closed_form";
    g.dim = 0;
    g.leading = 1;
    g.degree = 1;
    return g;
  }
  const RestrictedSystem rs = restrict_roots(pair, seq);
  const LatticeSpec spec = lattice_spec(rs, i);
  if (spec.cone != ConeClass::standard)
    throw UnsupportedError(
        "degree_closed: closed form covers the standard cone only");
  const long dim = dimension_formula(rs, i);
  const std::vector<Weight> delta = delta_plus_roots(pair, seq, i);
  if (dim != i + static_cast<long>(delta.size()))
    throw ContractError(
        "degree_closed: dimension formula disagrees with the root count");
  Budget bud;
  bud.limit = term_budget;
  MPoly f;
  f[ExpVec(static_cast<std::size_t>(i), 0)] = 1;
  Rat norm(1);
  const Weight& rho = pair.k().rho();
  for (const Weight& alpha : delta) {
    std::vector<Rat> form(static_cast<std::size_t>(i));
    for (long j = 0; j < i; ++j)
      form[static_cast<std::size_t>(j)] =
          dot(seq.gammas[static_cast<std::size_t>(j)], alpha);
    f = mul_linear(f, form, bud);
    norm *= dot(rho, alpha);
  }
  if (norm == 0)
    throw ContractError("degree_closed: K half-sum pairs to zero on a root");
  const Rat integral = ordered_simplex_integral(f, i, term_budget);
  OrbitGeometry g;
  g.route = "closed_form";
  g.dim = dim;
  g.leading = integral / norm;
  g.degree = g.leading * Rat(factorial(dim));
  if (!is_integer(g.degree) || g.degree <= 0)
    throw ContractError("degree_closed: degree is not a positive integer");
  return g;
}

GeometryReport orbit_geometry(const SymmetricPair& pair, const SOSequence& seq,
                              long i, long long term_budget) {
  GeometryReport rep;
  rep.i = i;
  const RestrictedSystem rs = restrict_roots(pair, seq);
  rep.dim_formula = i == 0 ? 0 : dimension_formula(rs, i);
  rep.brute = degree_interpolated(pair, seq, i);
  try {
    rep.closed = degree_closed(pair, seq, i, term_budget);
    rep.closed_supported = true;
  } catch (const UnsupportedError&) {
    rep.closed_supported = false;
  }
  rep.routes_agree = rep.closed_supported && rep.brute.dim == rep.closed.dim &&
                     rep.brute.leading == rep.closed.leading &&
                     rep.brute.degree == rep.closed.degree;
  return rep;
}

}  // namespace sphorb
