#ifndef SPHORB_HASSE_HPP
#define SPHORB_HASSE_HPP

// Closure-order (Hasse) diagrams of the nilpotent K_C-orbits met by the
// orbit chains, in the signed-partition labelling.  Each supported family
// has a fixed diagram template parametrised by the rank data; nodes whose
// row multiplicities would go negative are dropped together with their
// incident edges (this is how the small-rank members degenerate).

#include <string>
#include <vector>

#include "sphorb/symmetric_pair.hpp"

namespace sphorb {

// One row group of a signed partition: `mult` rows of length `length`,
// decorated with a sign (+1 / -1) or undecorated (0).
struct SignedRow {
  int length = 0;
  int sign = 0;
  int mult = 0;
};

struct SignedPartition {
  std::vector<SignedRow> rows;  // canonical order; zero multiplicities removed
  std::string tag;              // "I" / "II" when the figure splits a label
};

void canonicalize(SignedPartition& part);
long box_count(const SignedPartition& part);
std::string render_signed(const SignedPartition& part);  // "(+3)^2(2)(+1)"
SignedPartition parse_signed(const std::string& text);
bool same_partition(const SignedPartition& a, const SignedPartition& b);

// Node id: rendered partition, plus "#I"/"#II" when tagged.
std::string node_id(const SignedPartition& part);

struct HasseNode {
  std::string id;
  SignedPartition part;
};

struct HasseEdge {
  std::string from;  // larger orbit
  std::string to;    // smaller orbit in its closure
  bool doubled = false;
};

struct HasseGraph {
  std::vector<HasseNode> nodes;
  std::vector<HasseEdge> edges;

  bool has_node(const std::string& id) const;
  bool has_edge(const std::string& from, const std::string& to,
                bool doubled) const;
};

HasseGraph hasse_graph(const SymmetricPair& pair);

// Branch names accepted by chain_partitions for this pair.
std::vector<std::string> chain_labels(const SymmetricPair& pair);

// The signed partitions along one orbit chain, ascending from the zero
// orbit; consecutive members are joined by doubled edges in the graph.
std::vector<SignedPartition> chain_partitions(const SymmetricPair& pair,
                                              const std::string& branch);

std::string emit_dot(const HasseGraph& graph);

}  // namespace sphorb

#endif
