#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ged/matrix.hpp"

namespace ged {

/// Reserved label carried by padding nodes.
inline constexpr std::string_view kDummyLabel = "ε";

using Edge = std::pair<std::size_t, std::size_t>;

/// Simple undirected node-labeled graph. Immutable once built.
///
/// Nodes are indexed 0..n-1. Edges are stored normalized (first < second) and
/// sorted. Dummy nodes are isolated, labeled kDummyLabel and always trail the
/// real nodes.
class LabeledGraph {
 public:
  LabeledGraph() = default;

  /// Validates and builds a graph without dummy nodes. Edges may be given in
  /// either orientation; self-loops, duplicates, out-of-range endpoints and
  /// the reserved label are rejected with InputError.
  LabeledGraph(std::vector<std::string> labels, std::vector<Edge> edges);

  std::size_t order() const { return labels_.size(); }
  std::size_t real_order() const { return order() - dummy_count_; }
  std::size_t dummy_count() const { return dummy_count_; }
  std::size_t edge_count() const { return edges_.size(); }

  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool is_dummy(std::size_t i) const { return i >= real_order(); }
  bool has_edge(std::size_t i, std::size_t j) const {
    return adj_[i * order() + j] != 0;
  }
  std::size_t degree(std::size_t i) const;

  /// Copy of this graph with `count` isolated dummy nodes appended.
  LabeledGraph with_dummies(std::size_t count) const;

  bool operator==(const LabeledGraph& other) const {
    return labels_ == other.labels_ && edges_ == other.edges_ &&
           dummy_count_ == other.dummy_count_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<char> adj_;
  std::size_t dummy_count_ = 0;
};

/// Two graphs padded to a common order. At most one side carries dummies.
struct GraphPair {
  LabeledGraph g1;
  LabeledGraph g2;

  std::size_t order() const { return g1.order(); }
};

GraphPair pad_pair(const LabeledGraph& g1, const LabeledGraph& g2);

/// 0/1 adjacency matrix; dummy rows and columns are zero.
Matrix adjacency(const LabeledGraph& g);

/// Graph JSON: {"edges": [[i,j],...], "nodes": [{"id": i, "label": s},...]}.
LabeledGraph load_graph(std::istream& in);
LabeledGraph load_graph_file(const std::string& path);
LabeledGraph parse_graph(std::string_view text);

/// Canonical serialization (sorted keys, sorted edges). Dummies are dropped.
std::string save_graph(const LabeledGraph& g);

}  // namespace ged
