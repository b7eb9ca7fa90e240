#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "ged/cost_model.hpp"
#include "ged/graph.hpp"
#include "ged/permutation.hpp"

namespace ged {

enum class EditKind {
  node_insert,
  node_delete,
  node_substitute,
  edge_insert,
  edge_delete
};

const char* to_string(EditKind kind);

/// One edit operation. Node indices live in the padded index spaces of the
/// pair: `u`, `v` index g1, `target_u`, `target_v` index g2.
///
/// node_insert:     u = g1 dummy, target_u = inserted g2 node, to_label
/// node_delete:     u = deleted g1 node, from_label
/// node_substitute: u -> target_u, from_label -> to_label
/// edge_delete:     (u, v) an edge of g1
/// edge_insert:     (u, v) preimages in g1, (target_u, target_v) the g2 edge
struct EditOp {
  EditKind kind;
  std::size_t u = 0;
  std::size_t v = 0;
  std::size_t target_u = 0;
  std::size_t target_v = 0;
  std::string from_label;
  std::string to_label;
  double cost = 0.0;
};

struct EditPath {
  std::vector<EditOp> ops;
  double total_cost = 0.0;
};

/// GED realized by mapping node i of g1 to node pi[i] of g2: node costs plus
/// κ² for every node pair whose edge slot exists on exactly one side.
/// Accumulated in index order. Throws InputError if pi has the wrong size.
double ged_under_mapping(const GraphPair& pair, const Permutation& pi,
                         const CostModel& cm);

/// Same sum with costs already bound to the pair.
double ged_under_mapping(const GraphPair& pair, const Permutation& pi,
                         const PairCosts& costs);

/// Node ops in g1 index order, then edge deletions, then edge insertions.
/// total_cost is accumulated in the same order as ged_under_mapping and is
/// bit-identical to it.
EditPath extract_edit_path(const GraphPair& pair, const Permutation& pi,
                           const CostModel& cm);

struct ExactResult {
  double ged = 0.0;
  Permutation optimal_mapping;
};

inline constexpr std::size_t kDefaultNodeBudget = 9;

/// Exhaustive minimum of ged_under_mapping over all permutations of the
/// padded pair. Ties keep the lexicographically smallest mapping. Throws
/// BudgetError when the padded order exceeds `node_budget`.
ExactResult exact_ged(const LabeledGraph& g1, const LabeledGraph& g2,
                      const CostModel& cm,
                      std::size_t node_budget = kDefaultNodeBudget);
ExactResult exact_ged(const GraphPair& pair, const CostModel& cm,
                      std::size_t node_budget = kDefaultNodeBudget);

nlohmann::json to_json(const EditPath& path);

}  // namespace ged
