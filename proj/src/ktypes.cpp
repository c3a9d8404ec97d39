#include "sphorb/ktypes.hpp"

#include <cstdlib>

#include "sphorb/errors.hpp"

namespace sphorb {

LatticeSpec lattice_spec(const RestrictedSystem& rs, long i, bool closure) {
  if (i < 0 || i > rs.n)
    throw ParamError("lattice_spec: i must lie in [0, " +
                     std::to_string(rs.n) + "]");
  LatticeSpec spec;
  spec.i = i;
  spec.n = rs.n;
  spec.closure = closure;
  if (i < rs.n) {
    spec.cone = ConeClass::standard;
    return spec;
  }
  // Full-length case: the cone depends on which restricted classes occur.
  if (rs.m_b > 0 || rs.m_C > 0) {
    spec.cone = ConeClass::standard;
  } else if (rs.m_d > 0 || (rs.m_11_plus > 0 && rs.m_11_minus > 0)) {
    spec.cone = ConeClass::dn_full;
  } else if (rs.m_a > 0 || rs.m_A > 0 || rs.m_11_minus > 0) {
    spec.cone = ConeClass::hermitian_an_An;
  } else if (rs.n == 1) {
    // Rank one with no single-slot class at all does not occur in the
    // catalogue, but a lone gamma with nothing attached still spans a
    // standard half-line.
    spec.cone = ConeClass::standard;
  } else {
    throw ContractError("lattice_spec: restricted system has no classes");
  }
  return spec;
}

bool admits(const LatticeSpec& spec, const CoeffTuple& a) {
  if (static_cast<long>(a.size()) != spec.i)
    throw ParamError("admits: tuple length must equal i");
  if (spec.i == 0) return true;
  const long last = spec.i - 1;
  switch (spec.cone) {
    case ConeClass::standard:
      for (long j = 0; j < last; ++j)
        if (a[j] < a[j + 1]) return false;
      return a[last] >= 0;
    case ConeClass::hermitian_an_An:
      for (long j = 0; j < last; ++j)
        if (a[j] < a[j + 1]) return false;
      // Closure: nonnegative tail.  Open orbit: a_n unbounded below (the
      // inverse of the last generator becomes regular).
      return spec.closure ? a[last] >= 0 : true;
    case ConeClass::dn_full: {
      for (long j = 0; j + 1 < last; ++j)
        if (a[j] < a[j + 1]) return false;
      return last == 0 ? true : a[last - 1] >= std::labs(a[last]);
    }
  }
  return false;
}

long tuple_grading(const LatticeSpec& spec, const CoeffTuple& a) {
  if (static_cast<long>(a.size()) != spec.i)
    throw ParamError("tuple_grading: tuple length must equal i");
  long total = 0;
  for (long j = 0; j < spec.i; ++j) {
    if (spec.cone == ConeClass::dn_full && j == spec.i - 1)
      total += std::labs(a[j]);
    else
      total += a[j];
  }
  return total;
}

namespace {

void enumerate(const LatticeSpec& spec, long slot, long upper, long budget,
               CoeffTuple& acc, std::vector<CoeffTuple>& out) {
  if (slot == spec.i) {
    out.push_back(acc);
    return;
  }
  const bool signed_slot =
      spec.cone == ConeClass::dn_full && slot == spec.i - 1;
  const long hi = upper < budget ? upper : budget;
  for (long v = hi; v >= (signed_slot ? -hi : 0); --v) {
    if (signed_slot && std::labs(v) > budget) continue;
    acc.push_back(v);
    const long used = signed_slot ? std::labs(v) : v;
    enumerate(spec, slot + 1, v, budget - used, acc, out);
    acc.pop_back();
  }
}

unsigned long long count_rec(const LatticeSpec& spec, long slot, long upper,
                             long budget) {
  if (slot == spec.i) return 1;
  const bool signed_slot =
      spec.cone == ConeClass::dn_full && slot == spec.i - 1;
  const long hi = upper < budget ? upper : budget;
  unsigned long long total = 0;
  if (signed_slot) {
    // v = 0 once, then +-v pairs.
    if (hi >= 0) total += 1;
    if (hi >= 1) total += 2 * static_cast<unsigned long long>(hi);
    return total;
  }
  for (long v = 0; v <= hi; ++v)
    total += count_rec(spec, slot + 1, v, budget - v);
  return total;
}

}  // namespace

std::vector<CoeffTuple> filtration_layer(const LatticeSpec& spec, long t) {
  if (t < 0) throw ParamError("filtration_layer: t must be nonnegative");
  if (!spec.closure)
    throw ParamError(
        "filtration_layer: the open-orbit lattice is not degree-filtered");
  std::vector<CoeffTuple> out;
  CoeffTuple acc;
  acc.reserve(spec.i);
  enumerate(spec, 0, t, t, acc, out);
  return out;
}

unsigned long long lattice_count(const LatticeSpec& spec, long t) {
  if (t < 0) throw ParamError("lattice_count: t must be nonnegative");
  if (!spec.closure)
    throw ParamError(
        "lattice_count: the open-orbit lattice is not degree-filtered");
  return count_rec(spec, 0, t, t);
}

Weight tuple_weight(const SOSequence& seq, const CoeffTuple& a) {
  if (a.size() > seq.gammas.size())
    throw ParamError("tuple_weight: more coefficients than sequence entries");
  if (seq.gammas.empty()) return Weight{};
  Weight w = zero_weight(seq.gammas[0].size());
  for (std::size_t j = 0; j < a.size(); ++j)
    w = add(w, scale(Rat(a[j]), seq.gammas[j]));
  return w;
}

}  // namespace sphorb
