#include "ged/edit_path.hpp"

#include <algorithm>
#include <numeric>

#include "ged/error.hpp"

namespace ged {

const char* to_string(EditKind kind) {
  switch (kind) {
    case EditKind::node_insert: return "node_insert";
    case EditKind::node_delete: return "node_delete";
    case EditKind::node_substitute: return "node_substitute";
    case EditKind::edge_insert: return "edge_insert";
    case EditKind::edge_delete: return "edge_delete";
  }
  return "unknown";
}

namespace {

void check_mapping(const GraphPair& pair, const Permutation& pi) {
  if (pair.g1.order() != pair.g2.order())
    throw InputError("pair is not padded to a common order");
  if (pi.size() != pair.order())
    throw InputError("mapping size " + std::to_string(pi.size()) +
                     " does not match pair order " + std::to_string(pair.order()));
}

double node_cost(const GraphPair& pair, const PairCosts& costs, std::size_t i,
                 std::size_t j) {
  if (pair.g1.is_dummy(i)) return costs.insert(pair.g2.label(j));
  if (pair.g2.is_dummy(j)) return costs.remove(pair.g1.label(i));
  return costs.substitute(pair.g1.label(i), pair.g2.label(j));
}

}  // namespace

double ged_under_mapping(const GraphPair& pair, const Permutation& pi,
                         const PairCosts& costs) {
  check_mapping(pair, pi);
  const std::size_t n = pair.order();
  const double k2 = costs.edge_cost_squared();
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) total += node_cost(pair, costs, i, pi[i]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (pair.g1.has_edge(i, j) != pair.g2.has_edge(pi[i], pi[j])) total += k2;
  return total;
}

double ged_under_mapping(const GraphPair& pair, const Permutation& pi,
                         const CostModel& cm) {
  return ged_under_mapping(pair, pi, cm.for_pair(pair));
}

EditPath extract_edit_path(const GraphPair& pair, const Permutation& pi,
                           const CostModel& cm) {
  check_mapping(pair, pi);
  const PairCosts costs = cm.for_pair(pair);
  const std::size_t n = pair.order();
  const double k2 = costs.edge_cost_squared();
  EditPath path;

  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = pi[i];
    const double c = node_cost(pair, costs, i, j);
    path.total_cost += c;
    EditOp op{};
    op.u = i;
    op.target_u = j;
    op.cost = c;
    if (pair.g1.is_dummy(i)) {
      op.kind = EditKind::node_insert;
      op.to_label = pair.g2.label(j);
    } else if (pair.g2.is_dummy(j)) {
      op.kind = EditKind::node_delete;
      op.from_label = pair.g1.label(i);
    } else if (pair.g1.label(i) != pair.g2.label(j)) {
      op.kind = EditKind::node_substitute;
      op.from_label = pair.g1.label(i);
      op.to_label = pair.g2.label(j);
    } else {
      continue;
    }
    path.ops.push_back(std::move(op));
  }

  std::vector<EditOp> inserts;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool in1 = pair.g1.has_edge(i, j);
      if (in1 == pair.g2.has_edge(pi[i], pi[j])) continue;
      path.total_cost += k2;
      EditOp op{};
      op.kind = in1 ? EditKind::edge_delete : EditKind::edge_insert;
      op.u = i;
      op.v = j;
      op.target_u = pi[i];
      op.target_v = pi[j];
      op.cost = k2;
      (in1 ? path.ops : inserts).push_back(op);
    }
  }
  path.ops.insert(path.ops.end(), inserts.begin(), inserts.end());
  return path;
}

ExactResult exact_ged(const GraphPair& pair, const CostModel& cm,
                      std::size_t node_budget) {
  const std::size_t n = pair.order();
  if (n > node_budget)
    throw BudgetError("exact GED refused: padded order " + std::to_string(n) +
                      " exceeds node budget " + std::to_string(node_budget));
  const PairCosts costs = cm.for_pair(pair);

  // Node costs and g2 adjacency are looked up per permutation; cache them.
  Matrix node(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) node(i, j) = node_cost(pair, costs, i, j);
  const double k2 = costs.edge_cost_squared();

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  ExactResult best{std::numeric_limits<double>::infinity(), Permutation::identity(n)};
  // next_permutation walks in lexicographic order; only strict improvements
  // replace the incumbent, so ties keep the smallest mapping.
  do {
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) total += node(i, perm[i]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (pair.g1.has_edge(i, j) != pair.g2.has_edge(perm[i], perm[j])) total += k2;
    if (total < best.ged - 1e-12) {
      best.ged = total;
      best.optimal_mapping = Permutation(perm);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (n == 0) best.ged = 0.0;
  // Report the value through the same accumulation as ged_under_mapping.
  best.ged = ged_under_mapping(pair, best.optimal_mapping, costs);
  return best;
}

ExactResult exact_ged(const LabeledGraph& g1, const LabeledGraph& g2,
                      const CostModel& cm, std::size_t node_budget) {
  return exact_ged(pad_pair(g1, g2), cm, node_budget);
}

nlohmann::json to_json(const EditPath& path) {
  nlohmann::json ops = nlohmann::json::array();
  for (const EditOp& op : path.ops) {
    nlohmann::json o = {{"kind", to_string(op.kind)}, {"cost", op.cost}};
    switch (op.kind) {
      case EditKind::node_insert:
        o["g1_node"] = op.u;
        o["g2_node"] = op.target_u;
        o["label"] = op.to_label;
        break;
      case EditKind::node_delete:
        o["g1_node"] = op.u;
        o["label"] = op.from_label;
        break;
      case EditKind::node_substitute:
        o["g1_node"] = op.u;
        o["g2_node"] = op.target_u;
        o["from_label"] = op.from_label;
        o["to_label"] = op.to_label;
        break;
      case EditKind::edge_delete:
        o["edge"] = {op.u, op.v};
        break;
      case EditKind::edge_insert:
        o["edge"] = {op.u, op.v};
        o["g2_edge"] = {op.target_u, op.target_v};
        break;
    }
    ops.push_back(std::move(o));
  }
  return {{"ops", std::move(ops)}, {"total_cost", path.total_cost}};
}

}  // namespace ged
