#include "sphorb/json_io.hpp"

#include <sstream>

namespace sphorb {

using nlohmann::json;

json rat_json(const Rat& x) {
  return json{{"num", x.get_num().get_str()}, {"den", x.get_den().get_str()}};
}

json weight_json(const Weight& w) {
  json arr = json::array();
  for (const Rat& c : w) arr.push_back(rat_json(c));
  return arr;
}

namespace {

const char* block_type_name(BlockType t) {
  switch (t) {
    case BlockType::A: return "A";
    case BlockType::B: return "B";
    case BlockType::C: return "C";
    case BlockType::D: return "D";
    case BlockType::Torus: return "torus";
  }
  return "?";
}

}  // namespace

json pair_json(const SymmetricPair& pair) {
  json j;
  j["family"] = family_slug(pair.params().family);
  j["name"] = pair.name();
  json prm;
  prm["n"] = pair.params().n;
  prm["p"] = pair.params().p;
  prm["q"] = pair.params().q;
  j["params"] = prm;
  j["rank_k"] = pair.rank_k();
  j["real_rank"] = pair.real_rank();
  j["dim_p"] = pair.dim_p();
  j["hermitian"] = pair.hermitian();
  json blocks = json::array();
  for (const Block& b : pair.k().blocks()) {
    blocks.push_back(json{{"type", block_type_name(b.type)},
                          {"rank", b.rank},
                          {"label", b.label}});
  }
  j["k_blocks"] = blocks;
  json pw = json::array();
  for (const Weight& w : pair.p_weights()) {
    pw.push_back(json{{"coords", weight_json(w)}, {"display", pair.display(w)}});
  }
  j["p_weights"] = pw;
  j["p_zero_multiplicity"] = pair.p_zero_multiplicity();
  j["highest_p_weight"] = json{{"coords", weight_json(pair.highest_p_weight())},
                               {"display", pair.display(pair.highest_p_weight())}};
  if (pair.hermitian())
    j["center"] = json{{"coords", weight_json(pair.center())},
                       {"display", pair.display(pair.center())}};
  return j;
}

namespace {

// Fundamental-weight reading of a k-weight, block by block: the coefficients
// on the block's fundamental weights plus the central (trace/torus) part.
json fundamental_json(const SymmetricPair& pair, const Weight& w) {
  json arr = json::array();
  for (const auto& part : pair.fundamental_parts(w)) {
    json coeffs = json::array();
    for (const Rat& c : part.coeffs) coeffs.push_back(rat_json(c));
    arr.push_back(json{{"block", part.block_label},
                       {"coeffs", coeffs},
                       {"central", rat_json(part.central)}});
  }
  return arr;
}

}  // namespace

std::string omega_display(const SymmetricPair& pair, const Weight& w) {
  std::ostringstream os;
  bool first = true;
  for (const auto& part : pair.fundamental_parts(w)) {
    for (std::size_t k = 0; k < part.coeffs.size(); ++k) {
      const Rat& c = part.coeffs[k];
      if (c == 0) continue;
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      Rat a = abs(c);
      if (a != 1) os << (is_integer(a) ? a.get_str() : "(" + a.get_str() + ")");
      os << part.block_label << ".w" << (k + 1);
      first = false;
    }
    if (part.central != 0) {
      if (!first) os << (part.central < 0 ? " - " : " + ");
      else if (part.central < 0) os << "-";
      Rat a = abs(part.central);
      os << (is_integer(a) ? a.get_str() : "(" + a.get_str() + ")") << "["
         << part.block_label << "]";
      first = false;
    }
  }
  return first ? "0" : os.str();
}

json sequence_json(const SymmetricPair& pair, const SOSequence& seq) {
  json j;
  j["label"] = seq.label;
  j["length"] = seq.length();
  json gs = json::array();
  for (const Weight& g : seq.gammas)
    gs.push_back(json{{"coords", weight_json(g)},
                      {"display", pair.display(g)},
                      {"fundamental", fundamental_json(pair, g)},
                      {"omega_display", omega_display(pair, g)}});
  j["gammas"] = gs;
  return j;
}

json restricted_json(const RestrictedSystem& rs) {
  json j;
  j["n"] = rs.n;
  j["signature"] = signature_string(rs);
  j["multiplicities"] = json{{"a", rs.m_a},         {"A", rs.m_A},
                             {"b", rs.m_b},         {"C", rs.m_C},
                             {"d", rs.m_d},         {"a11_plus", rs.m_11_plus},
                             {"a11_minus", rs.m_11_minus}};
  j["zero_restrictions"] = rs.zero_restrictions;
  json roots = json::array();
  for (const RestrictedRoot& rr : rs.roots) {
    json coords = json::array();
    for (const Rat& c : rr.gamma_coords) coords.push_back(rat_json(c));
    roots.push_back(json{{"gamma_coords", coords},
                         {"multiplicity", rr.multiplicity},
                         {"class", root_class_name(rr.cls)}});
  }
  j["roots"] = roots;
  return j;
}

json poly_json(const Poly1& p) {
  json j;
  j["degree"] = p.degree();
  json cs = json::array();
  for (const Rat& c : p.coeffs) cs.push_back(rat_json(c));
  j["coeffs"] = cs;
  return j;
}

namespace {

json orbit_geometry_json(const OrbitGeometry& g) {
  return json{{"route", g.route},
              {"dim", g.dim},
              {"leading", rat_json(g.leading)},
              {"degree", rat_json(g.degree)}};
}

}  // namespace

json geometry_json(const GeometryReport& rep) {
  json j;
  j["i"] = rep.i;
  j["dim_formula"] = rep.dim_formula;
  j["brute"] = orbit_geometry_json(rep.brute);
  j["closed_supported"] = rep.closed_supported;
  if (rep.closed_supported) j["closed"] = orbit_geometry_json(rep.closed);
  j["routes_agree"] = rep.routes_agree;
  return j;
}

json hasse_json(const HasseGraph& g) {
  json j;
  json nodes = json::array();
  for (const HasseNode& n : g.nodes) {
    json rows = json::array();
    for (const SignedRow& r : n.part.rows)
      rows.push_back(
          json{{"length", r.length}, {"sign", r.sign}, {"mult", r.mult}});
    nodes.push_back(json{{"id", n.id},
                         {"partition", render_signed(n.part)},
                         {"tag", n.part.tag},
                         {"rows", rows}});
  }
  j["nodes"] = nodes;
  json edges = json::array();
  for (const HasseEdge& e : g.edges)
    edges.push_back(
        json{{"from", e.from}, {"to", e.to}, {"double", e.doubled}});
  j["edges"] = edges;
  return j;
}

json error_json(const std::string& kind, const std::string& message) {
  return json{{"error", json{{"kind", kind}, {"message", message}}}};
}

}  // namespace sphorb
