// Command-line surface: one subcommand per module, JSON/CSV/DOT/text output,
// deterministic exit codes (0 ok, 1 internal contract violation, 2 bad or
// unsupported parameters, 3 term budget exceeded).

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sphorb/conformance.hpp"
#include "sphorb/errors.hpp"
#include "sphorb/hasse.hpp"
#include "sphorb/hilbert.hpp"
#include "sphorb/json_io.hpp"
#include "sphorb/ktypes.hpp"
#include "sphorb/restricted.hpp"
#include "sphorb/sequences.hpp"
#include "sphorb/symmetric_pair.hpp"

namespace {

using nlohmann::json;
using namespace sphorb;

struct Options {
  std::string family;
  int n = 0, p = 0, q = 0;
  long i = -1;
  long t = -1;
  long t_max = -1;
  long long term_budget = kDefaultTermBudget;
  std::string branch;
  std::string format;
  bool empty_grid = false;
};

void add_common(CLI::App* sub, Options& opt, const std::string& default_fmt,
                const std::vector<std::string>& formats,
                bool family_required = true) {
  auto* fam = sub->add_option("--family", opt.family,
                              "family slug: sl_r, sl_h, su, so2q, sopq, "
                              "so_star, sp_r, sp_pq");
  if (family_required) fam->required();
  sub->add_option("--n", opt.n, "rank parameter (sl_r, sl_h, so_star, sp_r)");
  sub->add_option("--p", opt.p, "first parameter (su, sopq, sp_pq)");
  sub->add_option("--q", opt.q, "second parameter (su, so2q, sopq, sp_pq)");
  opt.format = default_fmt;
  sub->add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember(formats));
  sub->add_option("--branch", opt.branch,
                  "sequence label selector (prefix match)");
  sub->add_option("--term-budget", opt.term_budget,
                  "cap on expanded monomial terms");
}

SymmetricPair pair_from(const Options& opt) {
  PairParams prm;
  prm.family = family_from_slug(opt.family);
  prm.n = opt.n;
  prm.p = opt.p;
  prm.q = opt.q;
  return make_pair(prm);
}

const SOSequence& select_sequence(const std::vector<SOSequence>& seqs,
                                  const std::string& branch) {
  if (branch.empty()) return seqs.front();
  for (const SOSequence& s : seqs)
    if (s.label == branch) return s;
  for (const SOSequence& s : seqs)
    if (s.label.rfind(branch, 0) == 0) return s;
  std::ostringstream os;
  os << "no sequence labelled '" << branch << "'; available:";
  for (const SOSequence& s : seqs) os << " " << s.label;
  throw ParamError(os.str());
}

void emit_json(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------------------

int cmd_pair(const Options& opt) {
  const SymmetricPair pair = pair_from(opt);
  if (opt.format == "json") {
    emit_json(pair_json(pair));
    return 0;
  }
  std::cout << pair.name() << "\n"
            << "  rank k:      " << pair.rank_k() << "\n"
            << "  real rank:   " << pair.real_rank() << "\n"
            << "  dim p:       " << pair.dim_p() << "\n"
            << "  hermitian:   " << (pair.hermitian() ? "yes" : "no") << "\n"
            << "  highest p-weight: " << pair.display(pair.highest_p_weight())
            << "\n";
  return 0;
}

int cmd_sequences(const Options& opt) {
  const SymmetricPair pair = pair_from(opt);
  const std::vector<SOSequence> seqs = maximal_sequences(pair);
  if (opt.format == "json") {
    json arr = json::array();
    for (const SOSequence& s : seqs) arr.push_back(sequence_json(pair, s));
    emit_json(json{{"pair", pair.name()}, {"sequences", arr}});
    return 0;
  }
  std::cout << pair.name() << ": " << seqs.size() << " maximal sequence(s), "
            << "length law " << sequence_length_law(pair) << "\n";
  for (const SOSequence& s : seqs) {
    std::cout << "  [" << s.label << "] length " << s.length() << "\n";
    for (std::size_t k = 0; k < s.gammas.size(); ++k)
      std::cout << "    gamma" << (k + 1) << " = "
                << pair.display(s.gammas[k]) << "   (fundamental: "
                << omega_display(pair, s.gammas[k]) << ")\n";
  }
  return 0;
}

int cmd_restricted(const Options& opt) {
  const SymmetricPair pair = pair_from(opt);
  const std::vector<SOSequence> seqs = maximal_sequences(pair);
  const SOSequence& seq = select_sequence(seqs, opt.branch);
  const RestrictedSystem rs = restrict_roots(pair, seq);

  struct Row {
    long i;
    bool has_qrs;
    QRS qrs;
    std::string why;
    long dim;
  };
  std::vector<Row> rows;
  for (long i = 1; i <= rs.n; ++i) {
    Row row{i, true, {}, "", dimension_formula(rs, i)};
    try {
      row.qrs = qrs_constants(rs, i);
    } catch (const UnsupportedError& e) {
      row.has_qrs = false;
      row.why = e.what();
    }
    rows.push_back(row);
  }

  if (opt.format == "json") {
    json j = restricted_json(rs);
    j["pair"] = pair.name();
    j["sequence"] = seq.label;
    json table = json::array();
    for (const Row& r : rows) {
      json e{{"i", r.i}, {"dim", r.dim}};
      if (r.has_qrs) {
        e["q"] = r.qrs.q;
        e["r"] = r.qrs.r;
        e["s"] = r.qrs.s;
      } else {
        e["unsupported"] = r.why;
      }
      table.push_back(e);
    }
    j["table"] = table;
    emit_json(j);
    return 0;
  }
  if (opt.format == "csv") {
    std::cout << "i,q,r,s,dim\n";
    for (const Row& r : rows) {
      std::cout << r.i << ",";
      if (r.has_qrs)
        std::cout << r.qrs.q << "," << r.qrs.r << "," << r.qrs.s;
      else
        std::cout << ",,";
      std::cout << "," << r.dim << "\n";
    }
    return 0;
  }
  std::cout << pair.name() << " [" << seq.label
            << "]: signature " << signature_string(rs) << "\n";
  std::cout << "  multiplicities: a=" << rs.m_a << " A=" << rs.m_A
            << " b=" << rs.m_b << " C=" << rs.m_C << " d=" << rs.m_d
            << " a11+=" << rs.m_11_plus << " a11-=" << rs.m_11_minus << "\n";
  for (const Row& r : rows) {
    std::cout << "  i=" << r.i << ": dim " << r.dim;
    if (r.has_qrs)
      std::cout << ", q=" << r.qrs.q << " r=" << r.qrs.r << " s=" << r.qrs.s;
    else
      std::cout << ", no (q,r,s) presentation (" << r.why << ")";
    std::cout << "\n";
  }
  return 0;
}

int cmd_ktypes(const Options& opt) {
  const SymmetricPair pair = pair_from(opt);
  const std::vector<SOSequence> seqs = maximal_sequences(pair);
  const SOSequence& seq = select_sequence(seqs, opt.branch);
  const RestrictedSystem rs = restrict_roots(pair, seq);
  const long i = opt.i < 0 ? rs.n : opt.i;
  const long t_max = opt.t_max < 0 ? 4 : opt.t_max;
  const LatticeSpec spec = lattice_spec(rs, i);

  const char* cone = spec.cone == ConeClass::standard ? "standard"
                     : spec.cone == ConeClass::hermitian_an_An
                         ? "hermitian_an_An"
                         : "dn_full";
  if (opt.format == "json") {
    json layers = json::array();
    for (long t = 0; t <= t_max; ++t) {
      json tuples = json::array();
      for (const CoeffTuple& a : filtration_layer(spec, t))
        tuples.push_back(a);
      layers.push_back(json{{"t", t},
                            {"count", lattice_count(spec, t)},
                            {"tuples", tuples}});
    }
    emit_json(json{{"pair", pair.name()},
                   {"sequence", seq.label},
                   {"i", i},
                   {"cone", cone},
                   {"layers", layers}});
    return 0;
  }
  if (opt.format == "csv") {
    std::cout << "t,count\n";
    for (long t = 0; t <= t_max; ++t)
      std::cout << t << "," << lattice_count(spec, t) << "\n";
    return 0;
  }
  std::cout << pair.name() << " [" << seq.label << "] i=" << i << ", cone "
            << cone << "\n";
  for (long t = 0; t <= t_max; ++t) {
    const auto layer = filtration_layer(spec, t);
    std::cout << "  t<=" << t << ": " << layer.size() << " tuple(s):";
    for (const CoeffTuple& a : layer) {
      std::cout << " (";
      for (std::size_t k = 0; k < a.size(); ++k)
        std::cout << (k ? "," : "") << a[k];
      std::cout << ")";
    }
    std::cout << "\n";
  }
  return 0;
}

int cmd_hilbert(const Options& opt) {
  const SymmetricPair pair = pair_from(opt);
  const std::vector<SOSequence> seqs = maximal_sequences(pair);
  const SOSequence& seq = select_sequence(seqs, opt.branch);
  const RestrictedSystem rs = restrict_roots(pair, seq);
  const long i = opt.i < 0 ? rs.n : opt.i;

  if (opt.t >= 0) {  // single value
    const Int v = hilbert_value(pair, seq, i, opt.t);
    if (opt.format == "json")
      emit_json(json{{"pair", pair.name()},
                     {"sequence", seq.label},
                     {"i", i},
                     {"t", opt.t},
                     {"value", v.get_str()}});
    else
      std::cout << v.get_str() << "\n";
    return 0;
  }

  const long t_max = opt.t_max < 0 ? 8 : opt.t_max;
  const Poly1 poly = hilbert_polynomial(pair, seq, i);
  if (opt.format == "json") {
    json values = json::array();
    for (long t = 0; t <= t_max; ++t)
      values.push_back(json{
          {"t", t}, {"value", hilbert_value(pair, seq, i, t).get_str()}});
    emit_json(json{{"pair", pair.name()},
                   {"sequence", seq.label},
                   {"i", i},
                   {"values", values},
                   {"polynomial", poly_json(poly)},
                   {"degree", poly.degree()}});
    return 0;
  }
  if (opt.format == "csv") {
    std::cout << "t,value\n";
    for (long t = 0; t <= t_max; ++t)
      std::cout << t << "," << hilbert_value(pair, seq, i, t).get_str()
                << "\n";
    return 0;
  }
  std::cout << pair.name() << " [" << seq.label << "] i=" << i << "\n";
  std::cout << "  values:";
  for (long t = 0; t <= t_max; ++t)
    std::cout << " " << hilbert_value(pair, seq, i, t).get_str();
  std::cout << "\n  polynomial degree " << poly.degree() << ", leading "
            << to_string(poly.leading()) << "\n";
  return 0;
}

int cmd_geometry(const Options& opt) {
  const SymmetricPair pair = pair_from(opt);
  const std::vector<SOSequence> seqs = maximal_sequences(pair);
  const SOSequence& seq = select_sequence(seqs, opt.branch);
  const RestrictedSystem rs = restrict_roots(pair, seq);
  std::vector<long> is;
  if (opt.i >= 0)
    is.push_back(opt.i);
  else
    for (long i = 1; i <= rs.n; ++i) is.push_back(i);

  std::vector<GeometryReport> reps;
  for (long i : is)
    reps.push_back(orbit_geometry(pair, seq, i, opt.term_budget));

  if (opt.format == "json") {
    if (reps.size() == 1 && opt.i >= 0) {
      json j = geometry_json(reps[0]);
      j["pair"] = pair.name();
      j["sequence"] = seq.label;
      emit_json(j);
    } else {
      json arr = json::array();
      for (const GeometryReport& g : reps) arr.push_back(geometry_json(g));
      emit_json(json{{"pair", pair.name()},
                     {"sequence", seq.label},
                     {"orbits", arr}});
    }
    return 0;
  }
  if (opt.format == "csv") {
    std::cout << "i,dim,degree,closed_supported,closed_degree,routes_agree\n";
    for (const GeometryReport& g : reps) {
      std::cout << g.i << "," << g.brute.dim << ","
                << to_string(g.brute.degree) << ","
                << (g.closed_supported ? "true" : "false") << ",";
      if (g.closed_supported) std::cout << to_string(g.closed.degree);
      std::cout << "," << (g.routes_agree ? "true" : "false") << "\n";
    }
    return 0;
  }
  std::cout << pair.name() << " [" << seq.label << "]\n";
  for (const GeometryReport& g : reps) {
    std::cout << "  i=" << g.i << ": dim " << g.brute.dim << ", degree "
              << to_string(g.brute.degree);
    if (g.closed_supported)
      std::cout << " (closed form " << to_string(g.closed.degree) << ", "
                << (g.routes_agree ? "agree" : "DISAGREE") << ")";
    else
      std::cout << " (interpolation only)";
    std::cout << "\n";
  }
  return 0;
}

int cmd_hasse(const Options& opt) {
  const SymmetricPair pair = pair_from(opt);
  const HasseGraph graph = hasse_graph(pair);
  if (opt.format == "dot") {
    std::cout << emit_dot(graph);
    return 0;
  }
  if (opt.format == "json") {
    json j = hasse_json(graph);
    j["pair"] = pair.name();
    emit_json(j);
    return 0;
  }
  long doubles = 0;
  for (const HasseEdge& e : graph.edges) doubles += e.doubled;
  std::cout << pair.name() << ": " << graph.nodes.size() << " nodes, "
            << graph.edges.size() << " edges (" << doubles << " doubled)\n";
  for (const HasseNode& n : graph.nodes) std::cout << "  " << n.id << "\n";
  return 0;
}

int cmd_conformance(const Options& opt) {
  std::vector<PairParams> grid;
  if (opt.empty_grid) {
    // empty grid: empty report
  } else if (!opt.family.empty()) {
    PairParams prm;
    prm.family = family_from_slug(opt.family);
    prm.n = opt.n;
    prm.p = opt.p;
    prm.q = opt.q;
    grid.push_back(prm);
  } else {
    grid = default_grid();
  }
  const ConformanceReport rep = run_grid(grid);
  if (opt.format == "json")
    emit_json(report_json(rep));
  else if (opt.format == "csv")
    std::cout << render_csv(rep);
  else
    std::cout << render_text(rep);
  if (!rep.ok()) {
    std::cerr << "conformance: " << rep.count(CheckStatus::FAIL)
              << " unexpected FAIL row(s)\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spherical nilpotent K-orbit calculator"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* pair_cmd = app.add_subcommand("pair", "symmetric pair data");
  add_common(pair_cmd, opt, "json", {"json", "text"});
  CLI::App* seq_cmd =
      app.add_subcommand("sequences", "maximal strongly orthogonal sequences");
  add_common(seq_cmd, opt, "json", {"json", "text"});
  CLI::App* res_cmd = app.add_subcommand(
      "restricted", "restricted root system, signature, exponents");
  add_common(res_cmd, opt, "json", {"json", "csv", "text"});
  CLI::App* kt_cmd =
      app.add_subcommand("ktypes", "K-type lattice filtration layers");
  add_common(kt_cmd, opt, "json", {"json", "csv", "text"});
  kt_cmd->add_option("--i", opt.i, "orbit chain prefix length");
  kt_cmd->add_option("--t-max", opt.t_max, "largest filtration degree");
  CLI::App* hil_cmd =
      app.add_subcommand("hilbert", "Hilbert function and polynomial");
  add_common(hil_cmd, opt, "json", {"json", "csv", "text"});
  hil_cmd->add_option("--i", opt.i, "orbit chain prefix length");
  hil_cmd->add_option("--t", opt.t, "single filtration degree");
  hil_cmd->add_option("--t-max", opt.t_max, "largest filtration degree");
  CLI::App* geo_cmd =
      app.add_subcommand("geometry", "orbit closure dimension and degree");
  add_common(geo_cmd, opt, "json", {"json", "csv", "text"});
  geo_cmd->add_option("--i", opt.i, "orbit chain prefix length");
  CLI::App* hasse_cmd =
      app.add_subcommand("hasse", "closure-order diagram");
  add_common(hasse_cmd, opt, "json", {"json", "dot", "text"});
  CLI::App* conf_cmd = app.add_subcommand(
      "conformance", "cross-check computed data against the published tables");
  add_common(conf_cmd, opt, "text", {"json", "csv", "text"},
             /*family_required=*/false);
  conf_cmd->add_flag("--empty", opt.empty_grid, "run an empty grid");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the message to stderr
    return 2;
  }

  const bool json_mode = opt.format == "json";
  auto fail = [&](const char* kind, const std::exception& e, int code) {
    if (json_mode) emit_json(error_json(kind, e.what()));
    std::cerr << "error (" << kind << "): " << e.what() << "\n";
    return code;
  };

  try {
    if (pair_cmd->parsed()) return cmd_pair(opt);
    if (seq_cmd->parsed()) return cmd_sequences(opt);
    if (res_cmd->parsed()) return cmd_restricted(opt);
    if (kt_cmd->parsed()) return cmd_ktypes(opt);
    if (hil_cmd->parsed()) return cmd_hilbert(opt);
    if (geo_cmd->parsed()) return cmd_geometry(opt);
    if (hasse_cmd->parsed()) return cmd_hasse(opt);
    if (conf_cmd->parsed()) return cmd_conformance(opt);
    throw ParamError("no subcommand given");
  } catch (const UnsupportedError& e) {
    return fail("unsupported", e, 2);
  } catch (const ParamError& e) {
    return fail("parameter", e, 2);
  } catch (const BudgetError& e) {
    return fail("budget", e, 3);
  } catch (const ContractError& e) {
    return fail("contract", e, 1);
  } catch (const std::exception& e) {
    return fail("internal", e, 1);
  }
}
