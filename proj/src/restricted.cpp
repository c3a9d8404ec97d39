#include "sphorb/restricted.hpp"

#include <map>
#include <set>
#include <sstream>

#include "sphorb/errors.hpp"

namespace sphorb {

std::string root_class_name(RootClass c) {
  switch (c) {
    case RootClass::a: return "a";
    case RootClass::A: return "A";
    case RootClass::b: return "b";
    case RootClass::C: return "C";
    case RootClass::d: return "d";
    case RootClass::a11_plus: return "a_{11,+}";
    case RootClass::a11_minus: return "a_{11,-}";
  }
  throw ContractError("unknown root class");
}

namespace {

std::string pattern_str(const std::vector<long>& h) {
  std::ostringstream os;
  os << "(";
  for (std::size_t j = 0; j < h.size(); ++j) {
    if (j) os << ",";
    os << h[j];
  }
  os << ")";
  return os.str();
}

}  // namespace

RestrictedSystem restrict_roots(const SymmetricPair& pair,
                                const SOSequence& seq) {
  if (seq.gammas.empty()) throw ParamError("restrict_roots: empty sequence");
  const long n = static_cast<long>(seq.length());
  RestrictedSystem rs;
  rs.n = n;

  // Distinct normalized patterns (2c_1,...,2c_n) with multiplicities.
  std::map<std::vector<long>, long> mult;
  for (const Weight& alpha : pair.k().positive_roots()) {
    std::vector<long> h(n);
    bool zero = true;
    for (long j = 0; j < n; ++j) {
      Rat c = seq.coroot_value(j, alpha);
      if (!is_integer(c))
        throw ContractError("restricted root with non-integer coroot value " +
                            c.get_str() + " for root " + pair.display(alpha));
      h[j] = static_cast<long>(to_integer(c).get_si());
      if (h[j]) zero = false;
    }
    if (zero) {
      ++rs.zero_restrictions;
      continue;
    }
    for (long j = 0; j < n; ++j) {  // sign-normalize: leading entry positive
      if (h[j] > 0) break;
      if (h[j] < 0) {
        for (long& x : h) x = -x;
        break;
      }
    }
    ++mult[h];
  }

  // Per-slot and per-pair tallies.
  std::map<long, long> b_mult, C_mult;
  std::map<std::pair<long, long>, long> plus_mult, minus_mult;
  for (const auto& [h, m] : mult) {
    std::vector<long> support;
    for (long j = 0; j < n; ++j)
      if (h[j]) support.push_back(j);
    if (support.size() == 1) {
      long v = h[support[0]];
      if (v == 1)
        b_mult[support[0]] += m;
      else if (v == 2)
        C_mult[support[0]] += m;
      else
        throw ContractError("unclassifiable restricted root pattern " +
                            pattern_str(h));
    } else if (support.size() == 2) {
      long v1 = h[support[0]], v2 = h[support[1]];
      auto key = std::make_pair(support[0], support[1]);
      if (v1 == 1 && v2 == -1)
        minus_mult[key] += m;
      else if (v1 == 1 && v2 == 1)
        plus_mult[key] += m;
      else
        throw ContractError("unclassifiable restricted root pattern " +
                            pattern_str(h));
    } else {
      throw ContractError("restricted root supported on " +
                          std::to_string(support.size()) + " slots: " +
                          pattern_str(h));
    }
  }

  auto uniform = [&](const std::map<long, long>& per_slot,
                     const char* what) -> long {
    if (per_slot.empty()) return 0;
    long m = per_slot.begin()->second;
    if (static_cast<long>(per_slot.size()) != n)
      throw ContractError(std::string(what) + "-class roots missing on some slots");
    for (const auto& [slot, v] : per_slot)
      if (v != m)
        throw ContractError(std::string(what) + "-class multiplicity not uniform");
    return m;
  };
  rs.m_b = uniform(b_mult, "b");
  rs.m_C = uniform(C_mult, "C");

  const bool have_plus = !plus_mult.empty();
  const bool have_minus = !minus_mult.empty();
  if (have_plus || have_minus) {
    // tau recognition: the two-element SO(p,q) sequences supported on a
    // single coordinate pair, where the (1,1)/(1,-1) multiplicities are
    // independent (p-2 and q-2).
    std::set<std::size_t> coord_support;
    for (const Weight& g : seq.gammas)
      for (std::size_t i = 0; i < g.size(); ++i)
        if (g[i] != 0) coord_support.insert(i);
    const bool tau = pair.params().family == Family::SOPQ && n == 2 &&
                     coord_support.size() == 2;
    if (tau) {
      rs.m_11_plus = have_plus ? plus_mult.begin()->second : 0;
      rs.m_11_minus = have_minus ? minus_mult.begin()->second : 0;
    } else if (have_plus) {
      // both signs on every pair with one common multiplicity: class d
      const long npairs = n * (n - 1) / 2;
      long m = plus_mult.begin()->second;
      if (static_cast<long>(plus_mult.size()) != npairs ||
          static_cast<long>(minus_mult.size()) != npairs)
        throw ContractError("d-class roots missing on some slot pair");
      for (const auto& [k, v] : plus_mult)
        if (v != m) throw ContractError("d-class multiplicity not uniform");
      for (const auto& [k, v] : minus_mult)
        if (v != m) throw ContractError("d-class multiplicity not uniform");
      rs.m_d = m;
    } else {
      // difference patterns only: Hermitian a/A class
      if (!pair.hermitian())
        throw ContractError(
            "difference-only pair patterns in a non-Hermitian pair");
      const long npairs = n * (n - 1) / 2;
      long m = minus_mult.begin()->second;
      if (static_cast<long>(minus_mult.size()) != npairs)
        throw ContractError("a-class roots missing on some slot pair");
      for (const auto& [k, v] : minus_mult)
        if (v != m) throw ContractError("a-class multiplicity not uniform");
      // The a/A distinction is not intrinsic to the eigenvalue patterns (the
      // accidental isomorphism so(2,4) = su(2,2) realizes the same system
      // both ways); we follow the table convention keying it to the family.
      if (pair.params().family == Family::SO2Q)
        rs.m_A = m;
      else
        rs.m_a = m;
    }
  }

  // Recorded distinct roots with their classes, for display and for the
  // conformance report.
  for (const auto& [h, m] : mult) {
    RestrictedRoot rr;
    for (long v : h) rr.gamma_coords.push_back(rat(v, 2));
    rr.multiplicity = m;
    std::vector<long> support;
    for (long j = 0; j < n; ++j)
      if (h[j]) support.push_back(j);
    if (support.size() == 1) {
      rr.cls = h[support[0]] == 1 ? RootClass::b : RootClass::C;
    } else if (rs.tau_type()) {
      rr.cls = h[support[1]] == 1 ? RootClass::a11_plus : RootClass::a11_minus;
    } else if (rs.m_d > 0) {
      rr.cls = RootClass::d;
    } else {
      rr.cls = rs.m_A > 0 ? RootClass::A : RootClass::a;
    }
    rs.roots.push_back(std::move(rr));
  }
  return rs;
}

std::string signature_string(const RestrictedSystem& rs) {
  std::ostringstream os;
  auto emit = [&](const char* name, long m, bool brace_sub = false) {
    if (m == 0) return;
    os << "(" << name;
    if (brace_sub)
      os << ")";
    else
      os << "_" << rs.n << ")";
    os << "^" << m;
  };
  emit("a", rs.m_a);
  emit("A", rs.m_A);
  emit("b", rs.m_b);
  emit("C", rs.m_C);
  emit("d", rs.m_d);
  emit("a_{11,+}", rs.m_11_plus, true);
  emit("a_{11,-}", rs.m_11_minus, true);
  std::string s = os.str();
  return s.empty() ? "()" : s;
}

QRS qrs_constants(const RestrictedSystem& rs, long i) {
  if (i < 1 || i > rs.n) throw ParamError("qrs_constants: i out of range");
  QRS out;
  if (rs.tau_type()) {
    // The two pair classes have unrelated multiplicities, so the root
    // product only takes the x^q (x-y)^r (x^2-y^2)^s shape when no pair is
    // visible (i = 1) or when the multiplicities happen to agree.
    if (i == 1) {
      out.q = rs.m_11_plus + rs.m_11_minus + rs.m_b + rs.m_C;
      return out;
    }
    if (rs.m_11_plus == rs.m_11_minus) {
      out.q = rs.m_b + rs.m_C;
      out.s = rs.m_11_plus;
      return out;
    }
    throw UnsupportedError(
        "qrs_constants: unequal a_{11,+/-} multiplicities admit no (q,r,s) "
        "presentation at full length");
  }
  out.q = (rs.n - i) * (rs.m_a + rs.m_A + 2 * rs.m_d) + rs.m_b + rs.m_C;
  out.r = rs.m_a + rs.m_A;
  out.s = rs.m_d;
  return out;
}

long dimension_formula(const RestrictedSystem& rs, long i) {
  if (i < 0 || i > rs.n) throw ParamError("dimension_formula: i out of range");
  const long P = rs.m_a + rs.m_A + 2 * rs.m_d + rs.m_11_plus + rs.m_11_minus;
  const long q = (rs.n - i) * P + rs.m_b + rs.m_C;
  return i * (q + 1) + i * (i - 1) * P / 2;
}

std::vector<Weight> delta_plus_roots(const SymmetricPair& pair,
                                     const SOSequence& seq, long i) {
  if (i < 1 || i > static_cast<long>(seq.length()))
    throw ParamError("delta_plus_roots: i out of range");
  std::vector<Weight> out;
  for (const Weight& alpha : pair.k().positive_roots()) {
    for (long j = 0; j < i; ++j) {
      if (dot(alpha, seq.gammas[j]) != 0) {
        out.push_back(alpha);
        break;
      }
    }
  }
  return out;
}

}  // namespace sphorb
