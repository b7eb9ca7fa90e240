#include "ged/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "ged/error.hpp"

namespace ged {

using nlohmann::json;

LabeledGraph::LabeledGraph(std::vector<std::string> labels,
                           std::vector<Edge> edges)
    : labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  for (std::size_t i = 0; i < n; ++i)
    if (labels_[i] == kDummyLabel)
      throw InputError("node " + std::to_string(i) + ": label \"ε\" is reserved");
  adj_.assign(n * n, 0);
  edges_.reserve(edges.size());
  for (std::size_t k = 0; k < edges.size(); ++k) {
    auto [a, b] = edges[k];
    const std::string where = "edges[" + std::to_string(k) + "]";
    if (a >= n || b >= n)
      throw InputError(where + ": endpoint out of range for " +
                       std::to_string(n) + " nodes");
    if (a == b) throw InputError(where + ": self-loop on node " + std::to_string(a));
    if (a > b) std::swap(a, b);
    if (adj_[a * n + b])
      throw InputError(where + ": duplicate edge (" + std::to_string(a) + ", " +
                       std::to_string(b) + ")");
    adj_[a * n + b] = adj_[b * n + a] = 1;
    edges_.emplace_back(a, b);
  }
  std::sort(edges_.begin(), edges_.end());
}

std::size_t LabeledGraph::degree(std::size_t i) const {
  std::size_t d = 0;
  for (std::size_t j = 0; j < order(); ++j) d += adj_[i * order() + j];
  return d;
}

LabeledGraph LabeledGraph::with_dummies(std::size_t count) const {
  LabeledGraph g;
  const std::size_t n = order() + count;
  g.labels_ = labels_;
  g.labels_.resize(n, std::string(kDummyLabel));
  g.edges_ = edges_;
  g.adj_.assign(n * n, 0);
  for (auto [a, b] : edges_) g.adj_[a * n + b] = g.adj_[b * n + a] = 1;
  g.dummy_count_ = dummy_count_ + count;
  return g;
}

GraphPair pad_pair(const LabeledGraph& g1, const LabeledGraph& g2) {
  if (g1.dummy_count() != 0 || g2.dummy_count() != 0)
    throw InputError("pad_pair: inputs must not contain dummy nodes");
  const std::size_t n = std::max(g1.order(), g2.order());
  return GraphPair{g1.with_dummies(n - g1.order()), g2.with_dummies(n - g2.order())};
}

Matrix adjacency(const LabeledGraph& g) {
  Matrix a(g.order(), g.order());
  for (auto [i, j] : g.edges()) a(i, j) = a(j, i) = 1.0;
  return a;
}

namespace {

LabeledGraph from_json(const json& doc) {
  if (!doc.is_object()) throw InputError("graph: top level must be an object");
  if (!doc.contains("nodes") || !doc["nodes"].is_array())
    throw InputError("graph: missing \"nodes\" array");
  std::vector<std::string> labels;
  const auto& nodes = doc["nodes"];
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const auto& node = nodes[k];
    const std::string where = "nodes[" + std::to_string(k) + "]";
    if (!node.is_object() || !node.contains("id") || !node.contains("label"))
      throw InputError(where + ": expected {\"id\": int, \"label\": string}");
    if (!node["id"].is_number_integer() || !node["label"].is_string())
      throw InputError(where + ": id must be an integer and label a string");
    if (node["id"].get<long long>() != static_cast<long long>(k))
      throw InputError(where + ": id " + node["id"].dump() + " breaks the contiguous 0..n-1 numbering");
    labels.push_back(node["label"].get<std::string>());
  }
  std::vector<Edge> edges;
  if (doc.contains("edges")) {
    const auto& arr = doc["edges"];
    if (!arr.is_array()) throw InputError("graph: \"edges\" must be an array");
    for (std::size_t k = 0; k < arr.size(); ++k) {
      const auto& e = arr[k];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer() || e[0].get<long long>() < 0 ||
          e[1].get<long long>() < 0)
        throw InputError("edges[" + std::to_string(k) +
                         "]: expected a pair of non-negative integers");
      edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
    }
  }
  return LabeledGraph(std::move(labels), std::move(edges));
}

}  // namespace

LabeledGraph parse_graph(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("graph: ") + e.what());
  }
  return from_json(doc);
}

LabeledGraph load_graph(std::istream& in) {
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_graph(ss.str());
}

LabeledGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file: " + path);
  try {
    return load_graph(in);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string save_graph(const LabeledGraph& g) {
  json nodes = json::array();
  for (std::size_t i = 0; i < g.real_order(); ++i)
    nodes.push_back({{"id", i}, {"label", g.label(i)}});
  json edges = json::array();
  for (auto [a, b] : g.edges()) edges.push_back({a, b});
  json doc = {{"edges", std::move(edges)}, {"nodes", std::move(nodes)}};
  return doc.dump(2) + "\n";
}

}  // namespace ged
