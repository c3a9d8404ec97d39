#include "sphorb/hasse.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "sphorb/errors.hpp"

namespace sphorb {

namespace {

// Canonical row order: longer rows first; at equal length + before
// undecorated before -.
int sign_rank(int s) { return s > 0 ? 0 : (s == 0 ? 1 : 2); }

}  // namespace

void canonicalize(SignedPartition& part) {
  std::vector<SignedRow> rows;
  for (const SignedRow& r : part.rows) {
    if (r.mult == 0) continue;
    if (r.mult < 0)
      throw ContractError("signed partition with negative row multiplicity");
    if (r.length <= 0)
      throw ContractError("signed partition with nonpositive row length");
    rows.push_back(r);
  }
  std::sort(rows.begin(), rows.end(),
            [](const SignedRow& a, const SignedRow& b) {
              if (a.length != b.length) return a.length > b.length;
              return sign_rank(a.sign) < sign_rank(b.sign);
            });
  std::vector<SignedRow> merged;
  for (const SignedRow& r : rows) {
    if (!merged.empty() && merged.back().length == r.length &&
        merged.back().sign == r.sign)
      merged.back().mult += r.mult;
    else
      merged.push_back(r);
  }
  part.rows = std::move(merged);
}

long box_count(const SignedPartition& part) {
  long total = 0;
  for (const SignedRow& r : part.rows)
    total += static_cast<long>(r.length) * r.mult;
  return total;
}

std::string render_signed(const SignedPartition& part) {
  std::ostringstream out;
  for (const SignedRow& r : part.rows) {
    out << '(';
    if (r.sign > 0) out << '+';
    if (r.sign < 0) out << '-';
    out << r.length << ')';
    if (r.mult > 1) out << '^' << r.mult;
  }
  if (part.rows.empty()) out << "()";
  return out.str();
}

SignedPartition parse_signed(const std::string& text) {
  SignedPartition part;
  std::size_t pos = 0;
  const auto fail = [&]() {
    throw ParamError("parse_signed: malformed partition string '" + text +
                     "' at offset " + std::to_string(pos));
  };
  if (text == "()") return part;
  while (pos < text.size() && text[pos] == '(') {
    ++pos;
    SignedRow row;
    row.sign = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      row.sign = text[pos] == '+' ? 1 : -1;
      ++pos;
    }
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start) fail();
    row.length = std::stoi(text.substr(start, pos - start));
    if (pos >= text.size() || text[pos] != ')') fail();
    ++pos;
    row.mult = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      start = pos;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
      if (pos == start) fail();
      row.mult = std::stoi(text.substr(start, pos - start));
    }
    part.rows.push_back(row);
  }
  if (pos < text.size()) {
    if (text[pos] != '#') fail();
    part.tag = text.substr(pos + 1);
    if (part.tag != "I" && part.tag != "II") fail();
  }
  canonicalize(part);
  return part;
}

bool same_partition(const SignedPartition& a, const SignedPartition& b) {
  if (a.tag != b.tag || a.rows.size() != b.rows.size()) return false;
  for (std::size_t k = 0; k < a.rows.size(); ++k) {
    if (a.rows[k].length != b.rows[k].length ||
        a.rows[k].sign != b.rows[k].sign || a.rows[k].mult != b.rows[k].mult)
      return false;
  }
  return true;
}

std::string node_id(const SignedPartition& part) {
  std::string id = render_signed(part);
  if (!part.tag.empty()) id += "#" + part.tag;
  return id;
}

bool HasseGraph::has_node(const std::string& id) const {
  for (const HasseNode& n : nodes)
    if (n.id == id) return true;
  return false;
}

bool HasseGraph::has_edge(const std::string& from, const std::string& to,
                          bool doubled) const {
  for (const HasseEdge& e : edges)
    if (e.from == from && e.to == to && e.doubled == doubled) return true;
  return false;
}

namespace {

SignedRow row(int length, int sign, int mult) { return {length, sign, mult}; }

// Assembles a template graph, dropping nodes with negative multiplicities
// (and later skipping edges with a dropped endpoint) and validating the
// total box count of every surviving node.
class Builder {
 public:
  explicit Builder(long boxes) : boxes_(boxes) {}

  // Returns the node id, or "" when the node is dropped.
  std::string add(std::vector<SignedRow> rows, std::string tag = "") {
    for (const SignedRow& r : rows)
      if (r.mult < 0) return "";
    SignedPartition part;
    part.rows = std::move(rows);
    part.tag = std::move(tag);
    canonicalize(part);
    if (box_count(part) != boxes_)
      throw ContractError("hasse template: node " + render_signed(part) +
                          " has " + std::to_string(box_count(part)) +
                          " boxes, expected " + std::to_string(boxes_));
    const std::string id = node_id(part);
    if (!graph_.has_node(id)) graph_.nodes.push_back({id, part});
    return id;
  }

  void edge(const std::string& from, const std::string& to, bool doubled) {
    if (from.empty() || to.empty()) return;
    graph_.edges.push_back({from, to, doubled});
  }

  HasseGraph take() { return std::move(graph_); }

 private:
  long boxes_;
  HasseGraph graph_;
};

HasseGraph build_sl_r(long n) {
  const long m = n / 2;
  Builder b(n);
  std::vector<std::string> ids(static_cast<std::size_t>(m) + 1);
  const long chain_top = n % 2 == 0 ? m - 1 : m;
  for (long i = 0; i <= chain_top; ++i)
    ids[static_cast<std::size_t>(i)] =
        b.add({row(2, 0, static_cast<int>(i)),
               row(1, 0, static_cast<int>(n - 2 * i))});
  for (long i = chain_top; i >= 1; --i)
    b.edge(ids[static_cast<std::size_t>(i)],
           ids[static_cast<std::size_t>(i - 1)], true);
  if (n % 2 == 0) {
    // The top orbit splits into two pieces with the same partition.
    const std::string top_rows_tag_i =
        b.add({row(2, 0, static_cast<int>(m)),
               row(1, 0, static_cast<int>(n - 2 * m))},
              "I");
    const std::string top_rows_tag_ii =
        b.add({row(2, 0, static_cast<int>(m)),
               row(1, 0, static_cast<int>(n - 2 * m))},
              "II");
    b.edge(top_rows_tag_i, ids[static_cast<std::size_t>(m - 1)], true);
    b.edge(top_rows_tag_ii, ids[static_cast<std::size_t>(m - 1)], true);
  }
  return b.take();
}

HasseGraph build_sl_h(long n) {
  const long m = n / 2;
  Builder b(n);
  std::vector<std::string> ids(static_cast<std::size_t>(m) + 1);
  for (long i = 0; i <= m; ++i)
    ids[static_cast<std::size_t>(i)] =
        b.add({row(2, 0, static_cast<int>(i)),
               row(1, 0, static_cast<int>(n - 2 * i))});
  for (long i = m; i >= 1; --i)
    b.edge(ids[static_cast<std::size_t>(i)],
           ids[static_cast<std::size_t>(i - 1)], true);
  return b.take();
}

HasseGraph build_su(long p, long q) {
  if (p != 2)
    throw UnsupportedError("hasse_graph: su template requires p = 2");
  if (q < 3)
    throw UnsupportedError("hasse_graph: su template requires q >= 3");
  const int qi = static_cast<int>(q);
  Builder b(p + q);
  const auto A = b.add({row(3, -1, 2), row(1, -1, qi - 4)});
  const auto B = b.add({row(3, -1, 1), row(2, -1, 1), row(1, -1, qi - 3)});
  const auto C = b.add({row(3, -1, 1), row(2, 1, 1), row(1, -1, qi - 3)});
  const auto D = b.add({row(3, -1, 1), row(1, 1, 1), row(1, -1, qi - 2)});
  const auto E = b.add({row(3, 1, 1), row(1, -1, qi - 1)});
  const auto F = b.add({row(2, -1, 2), row(1, -1, qi - 2)});
  const auto G = b.add({row(2, 1, 1), row(2, -1, 1), row(1, -1, qi - 2)});
  const auto H = b.add({row(2, 1, 2), row(1, -1, qi - 2)});
  const auto I = b.add({row(2, -1, 1), row(1, 1, 1), row(1, -1, qi - 1)});
  const auto J = b.add({row(2, 1, 1), row(1, 1, 1), row(1, -1, qi - 1)});
  const auto K = b.add({row(1, 1, 2), row(1, -1, qi)});
  b.edge(A, B, false);
  b.edge(A, C, false);
  b.edge(B, F, false);
  b.edge(B, D, false);
  b.edge(C, D, false);
  b.edge(C, H, false);
  b.edge(D, G, false);
  b.edge(E, G, false);
  b.edge(F, I, true);
  b.edge(G, I, false);
  b.edge(G, J, false);
  b.edge(H, J, true);
  b.edge(I, K, true);
  b.edge(J, K, true);
  return b.take();
}

HasseGraph build_so2q(long q) {
  if (q <= 4)
    throw UnsupportedError("hasse_graph: so(2,q) template requires q > 4");
  const int qi = static_cast<int>(q);
  Builder b(q + 2);
  const auto A = b.add({row(3, -1, 2), row(1, -1, qi - 4)});
  const auto B = b.add({row(3, 1, 1), row(1, -1, qi - 1)}, "I");
  const auto C = b.add({row(3, -1, 1), row(1, 1, 1), row(1, -1, qi - 2)});
  const auto D = b.add({row(3, 1, 1), row(1, -1, qi - 1)}, "II");
  const auto E = b.add({row(2, 1, 1), row(2, -1, 1), row(1, -1, qi - 2)}, "I");
  const auto F =
      b.add({row(2, 1, 1), row(2, -1, 1), row(1, -1, qi - 2)}, "II");
  const auto G = b.add({row(1, 1, 2), row(1, -1, qi)});
  b.edge(A, C, false);
  b.edge(B, E, true);
  b.edge(C, E, false);
  b.edge(C, F, false);
  b.edge(D, F, true);
  b.edge(E, G, true);
  b.edge(F, G, true);
  return b.take();
}

HasseGraph build_so_star(long n) {
  if (n < 4)
    throw UnsupportedError("hasse_graph: so* template requires n >= 4");
  const long m = n / 2;
  Builder b(n);
  const auto O = [&](long r, long s) {
    return b.add({row(2, 1, static_cast<int>(r)), row(2, -1, static_cast<int>(s)),
                  row(1, 0, static_cast<int>(n - 2 * r - 2 * s))});
  };
  std::vector<std::vector<std::string>> ids(
      static_cast<std::size_t>(m) + 1,
      std::vector<std::string>(static_cast<std::size_t>(m) + 1));
  for (long r = 0; r <= m; ++r)
    for (long s = 0; r + s <= m; ++s)
      ids[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)] = O(r, s);
  const auto X = b.add({row(3, 0, 1), row(1, 0, static_cast<int>(n - 3))});
  for (long r = 0; r <= m; ++r) {
    for (long s = 0; r + s <= m; ++s) {
      const auto& id = ids[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)];
      if (r >= 1)
        b.edge(id, ids[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(s)],
               s == 0);
      if (s >= 1)
        b.edge(id, ids[static_cast<std::size_t>(r)][static_cast<std::size_t>(s - 1)],
               r == 0);
    }
  }
  b.edge(X, ids[1][1], false);
  return b.take();
}

HasseGraph build_sp_r(long n) {
  Builder b(2 * n);
  const auto O = [&](long r, long s) {
    return b.add({row(2, 1, static_cast<int>(r)), row(2, -1, static_cast<int>(s)),
                  row(1, 1, static_cast<int>(n - r - s)),
                  row(1, -1, static_cast<int>(n - r - s))});
  };
  std::vector<std::vector<std::string>> ids(
      static_cast<std::size_t>(n) + 1,
      std::vector<std::string>(static_cast<std::size_t>(n) + 1));
  for (long r = 0; r <= n; ++r)
    for (long s = 0; r + s <= n; ++s)
      ids[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)] = O(r, s);
  for (long r = 0; r <= n; ++r) {
    for (long s = 0; r + s <= n; ++s) {
      const auto& id = ids[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)];
      if (r >= 1)
        b.edge(id, ids[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(s)],
               s == 0);
      if (s >= 1)
        b.edge(id, ids[static_cast<std::size_t>(r)][static_cast<std::size_t>(s - 1)],
               r == 0);
    }
  }
  return b.take();
}

HasseGraph build_sp_pq(long p, long q) {
  const int pi = static_cast<int>(p);
  const int qi = static_cast<int>(q);
  Builder b(p + q);
  std::vector<std::string> N(static_cast<std::size_t>(p) + 1);
  for (long i = 0; i <= p; ++i)
    N[static_cast<std::size_t>(i)] =
        b.add({row(2, 1, static_cast<int>(i)), row(1, 1, pi - static_cast<int>(i)),
               row(1, -1, qi - static_cast<int>(i))});
  for (long i = p; i >= 1; --i)
    b.edge(N[static_cast<std::size_t>(i)], N[static_cast<std::size_t>(i - 1)],
           true);
  const auto L1 =
      b.add({row(3, 1, 1), row(2, 1, 1), row(1, 1, pi - 3), row(1, -1, qi - 2)});
  const auto L2 = b.add({row(3, 1, 1), row(1, 1, pi - 2), row(1, -1, qi - 1)});
  const auto R1 =
      b.add({row(3, -1, 1), row(2, 1, 1), row(1, 1, pi - 2), row(1, -1, qi - 3)});
  const auto R2 = b.add({row(3, -1, 1), row(1, 1, pi - 1), row(1, -1, qi - 2)});
  const std::string n2 = p >= 2 ? N[2] : std::string();
  const std::string n1 = p >= 1 ? N[1] : std::string();
  b.edge(L1, L2, false);
  b.edge(L1, n2, false);
  b.edge(R1, n2, false);
  b.edge(R1, R2, false);
  b.edge(L2, n1, false);
  b.edge(R2, n1, false);
  return b.take();
}

}  // namespace

HasseGraph hasse_graph(const SymmetricPair& pair) {
  const PairParams& prm = pair.params();
  switch (prm.family) {
    case Family::SL_R:
      return build_sl_r(prm.n);
    case Family::SL_H:
      return build_sl_h(prm.n);
    case Family::SU:
      return build_su(prm.p, prm.q);
    case Family::SO2Q:
      return build_so2q(prm.q);
    case Family::SOPQ:
      throw UnsupportedError(
          "hasse_graph: no closure-order template for so(p,q) with p > 2");
    case Family::SOStar:
      return build_so_star(prm.n);
    case Family::SpR:
      return build_sp_r(prm.n);
    case Family::SpPQ:
      return build_sp_pq(prm.p, prm.q);
  }
  throw ParamError("hasse_graph: unknown family");
}

std::vector<std::string> chain_labels(const SymmetricPair& pair) {
  switch (pair.params().family) {
    case Family::SL_R:
      return pair.params().n % 2 == 0
                 ? std::vector<std::string>{"I", "II"}
                 : std::vector<std::string>{"principal"};
    case Family::SL_H:
    case Family::SpPQ:
      return {"principal"};
    case Family::SU:
    case Family::SO2Q:
    case Family::SOStar:
    case Family::SpR:
      return {"p_plus", "p_minus"};
    case Family::SOPQ:
      return {};
  }
  return {};
}

std::vector<SignedPartition> chain_partitions(const SymmetricPair& pair,
                                              const std::string& branch) {
  const PairParams& prm = pair.params();
  const auto labels = chain_labels(pair);
  if (std::find(labels.begin(), labels.end(), branch) == labels.end())
    throw ParamError("chain_partitions: unknown branch '" + branch +
                     "' for " + pair.name());
  std::vector<SignedPartition> chain;
  const auto push = [&](std::vector<SignedRow> rows, std::string tag = "") {
    SignedPartition part;
    part.rows = std::move(rows);
    part.tag = std::move(tag);
    canonicalize(part);
    chain.push_back(part);
  };
  switch (prm.family) {
    case Family::SL_R: {
      const long m = prm.n / 2;
      for (long i = 0; i <= m; ++i) {
        const bool top = i == m && prm.n % 2 == 0;
        push({row(2, 0, static_cast<int>(i)),
              row(1, 0, static_cast<int>(prm.n - 2 * i))},
             top ? branch : "");
      }
      return chain;
    }
    case Family::SL_H: {
      const long m = prm.n / 2;
      for (long i = 0; i <= m; ++i)
        push({row(2, 0, static_cast<int>(i)),
              row(1, 0, static_cast<int>(prm.n - 2 * i))});
      return chain;
    }
    case Family::SU: {
      const int sgn = branch == "p_plus" ? 1 : -1;
      for (long i = 0; i <= prm.p; ++i)
        push({row(2, sgn, static_cast<int>(i)),
              row(1, 1, static_cast<int>(prm.p - i)),
              row(1, -1, static_cast<int>(prm.q - i))});
      return chain;
    }
    case Family::SO2Q: {
      const std::string tag = branch == "p_plus" ? "I" : "II";
      const int qi = static_cast<int>(prm.q);
      push({row(1, 1, 2), row(1, -1, qi)});
      push({row(2, 1, 1), row(2, -1, 1), row(1, -1, qi - 2)}, tag);
      push({row(3, 1, 1), row(1, -1, qi - 1)}, tag);
      return chain;
    }
    case Family::SOStar: {
      const long m = prm.n / 2;
      const int sgn = branch == "p_plus" ? 1 : -1;
      for (long i = 0; i <= m; ++i)
        push({row(2, sgn, static_cast<int>(i)),
              row(1, 0, static_cast<int>(prm.n - 2 * i))});
      return chain;
    }
    case Family::SpR: {
      const int sgn = branch == "p_plus" ? 1 : -1;
      for (long i = 0; i <= prm.n; ++i)
        push({row(2, sgn, static_cast<int>(i)),
              row(1, 1, static_cast<int>(prm.n - i)),
              row(1, -1, static_cast<int>(prm.n - i))});
      return chain;
    }
    case Family::SpPQ: {
      for (long i = 0; i <= prm.p; ++i)
        push({row(2, 1, static_cast<int>(i)),
              row(1, 1, static_cast<int>(prm.p - i)),
              row(1, -1, static_cast<int>(prm.q - i))});
      return chain;
    }
    case Family::SOPQ:
      break;
  }
  throw UnsupportedError("chain_partitions: no template for " + pair.name());
}

std::string emit_dot(const HasseGraph& graph) {
  std::ostringstream out;
  out << "digraph closure_order {\n";
  out << "  rankdir=TB;\n";
  out << "  node [shape=box, fontname=\"monospace\"];\n";
  for (const HasseNode& n : graph.nodes) {
    std::string label = render_signed(n.part);
    if (!n.part.tag.empty()) label += " [" + n.part.tag + "]";
    out << "  \"" << n.id << "\" [label=\"" << label << "\"];\n";
  }
  for (const HasseEdge& e : graph.edges) {
    out << "  \"" << e.from << "\" -> \"" << e.to << "\"";
    if (e.doubled) out << " [style=bold]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace sphorb
