#ifndef SPHORB_CONFORMANCE_HPP
#define SPHORB_CONFORMANCE_HPP

// Cross-checks of the computed data against the published tables: the
// signature column, the (q,r,s)/dimension table, the closed-form degree
// against the interpolated one, sequence lengths, and the diagram templates.
// Known misprints in the published tables are registered; a mismatch that
// reproduces the registered corrected value reports as ERRATUM, anything
// else as FAIL.

#include <string>
#include <vector>

#include "json.hpp"
#include "sphorb/symmetric_pair.hpp"

namespace sphorb {

enum class CheckStatus { PASS, FAIL, ERRATUM, UNSUPPORTED };

std::string check_status_name(CheckStatus s);

struct CheckRow {
  std::string instance;  // "su(2,3)"
  std::string check;     // "table2_dim[i=1]"
  CheckStatus status = CheckStatus::PASS;
  std::string computed;
  std::string expected;  // the published value
  std::string note;
};

struct ConformanceReport {
  std::vector<CheckRow> rows;

  bool ok() const;  // true when no row FAILed
  long count(CheckStatus s) const;
};

// All checks for one pair instance.
ConformanceReport check_instance(const SymmetricPair& pair);

// The desk-scale default grid and its aggregate report (includes the
// grid-level rows, e.g. the duplicated half-sum product in the published
// degree formula).
std::vector<PairParams> default_grid();
ConformanceReport run_grid(const std::vector<PairParams>& grid);

std::string render_text(const ConformanceReport& rep);
std::string render_csv(const ConformanceReport& rep);
nlohmann::json report_json(const ConformanceReport& rep);

}  // namespace sphorb

#endif
