#ifndef SPHORB_ERRORS_HPP
#define SPHORB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sphorb {

// Invalid group parameters (out-of-range rank, p > q, unknown family, ...).
// CLI maps this to exit code 2.
struct ParamError : std::invalid_argument {
  explicit ParamError(const std::string& msg) : std::invalid_argument(msg) {}
};

// A violated mathematical contract: non-dominant weight fed to the dimension
// formula, interpolation that fails its verification points, a root whose
// eigenvalue pattern fits no known class, ...  CLI maps this to exit code 1.
struct ContractError : std::logic_error {
  explicit ContractError(const std::string& msg) : std::logic_error(msg) {}
};

// A computation exceeded its configured budget (expansion term count).
// CLI maps this to exit code 3.
struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

// The request is well-formed but outside the domain a routine covers
// (closed-form degree for the exceptional full-length cones, Hasse diagrams
// for families without a published template).  Subtype of ParamError so the
// CLI exit code stays 2, but catchable on its own where a fallback exists.
struct UnsupportedError : ParamError {
  explicit UnsupportedError(const std::string& msg) : ParamError(msg) {}
};

}  // namespace sphorb

#endif
