#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "test_util.hpp"

#include "ged/cost_model.hpp"
#include "ged/edit_path.hpp"
#include "ged/error.hpp"
#include "ged/kernel.hpp"

using namespace ged;

namespace {

const LabeledGraph kTriangle({"a", "a", "a"}, {{0, 1}, {1, 2}, {0, 2}});
const LabeledGraph kPath3({"a", "a", "a"}, {{0, 1}, {1, 2}});

// Replays `path` on g1 and checks that the result matches g2 on every g1 node
// that survives, under pi.
bool replay_matches(const GraphPair& pair, const Permutation& pi, const EditPath& path) {
  const std::size_t n = pair.order();
  std::vector<std::string> labels = pair.g1.labels();
  std::vector<char> alive(n);
  for (std::size_t i = 0; i < n; ++i) alive[i] = !pair.g1.is_dummy(i);
  std::set<Edge> edges(pair.g1.edges().begin(), pair.g1.edges().end());

  for (const EditOp& op : path.ops) {
    switch (op.kind) {
      case EditKind::node_insert:
        if (alive[op.u]) return false;
        alive[op.u] = 1;
        labels[op.u] = op.to_label;
        break;
      case EditKind::node_delete:
        if (!alive[op.u]) return false;
        alive[op.u] = 0;
        break;
      case EditKind::node_substitute:
        if (labels[op.u] != op.from_label) return false;
        labels[op.u] = op.to_label;
        break;
      case EditKind::edge_delete:
        if (!edges.erase({op.u, op.v})) return false;
        break;
      case EditKind::edge_insert:
        if (!edges.insert({op.u, op.v}).second) return false;
        break;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (pair.g2.is_dummy(pi[i])) {
      if (alive[i]) return false;
      continue;
    }
    if (!alive[i] || labels[i] != pair.g2.label(pi[i])) return false;
  }
  for (auto [a, b] : edges) {
    if (!alive[a] || !alive[b]) return false;
    if (!pair.g2.has_edge(pi[a], pi[b])) return false;
  }
  for (auto [a, b] : pair.g2.edges()) {
    const auto inv = pi.inverse();
    if (!edges.count(std::minmax(inv[a], inv[b]))) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("ged_under_mapping examples") {
  const auto case3 = CostModel::builtin(CostSetting::case3);
  const GraphPair same = pad_pair(kTriangle, kTriangle);
  CHECK(ged_under_mapping(same, Permutation::identity(3), case3) == 0.0);

  const GraphPair edge_vs_none =
      pad_pair(LabeledGraph({"a", "a"}, {{0, 1}}), LabeledGraph({"a", "a"}, {}));
  CHECK(ged_under_mapping(edge_vs_none, Permutation::identity(2), case3) == 1.0);

  // K2(1,2) -> K2(2,1): free relabeling in case3; in case2 both substitutions
  // go to the nearest (only other) id and cost 1 each.
  const GraphPair swapped =
      pad_pair(LabeledGraph({"1", "2"}, {{0, 1}}), LabeledGraph({"2", "1"}, {{0, 1}}));
  CHECK(ged_under_mapping(swapped, Permutation::identity(2), case3) == 0.0);
  CHECK(ged_under_mapping(swapped, Permutation::identity(2),
                          CostModel::builtin(CostSetting::case2)) == 2.0);
  CHECK(ged_under_mapping(swapped, Permutation({1, 0}),
                          CostModel::builtin(CostSetting::case2)) == 0.0);

  CHECK_THROWS_AS(ged_under_mapping(same, Permutation::identity(2), case3), InputError);
}

TEST_CASE("extract_edit_path examples") {
  const auto case3 = CostModel::builtin(CostSetting::case3);
  const auto case1 = CostModel::builtin(CostSetting::case1);

  const auto empty = extract_edit_path(pad_pair(kTriangle, kTriangle), Permutation::identity(3), case3);
  CHECK(empty.ops.empty());
  CHECK(empty.total_cost == 0.0);

  const GraphPair tp = pad_pair(kTriangle, kPath3);
  const auto ex = exact_ged(tp, case3);
  const auto path = extract_edit_path(tp, ex.optimal_mapping, case3);
  REQUIRE(path.ops.size() == 1);
  CHECK(path.ops[0].kind == EditKind::edge_delete);
  CHECK(path.total_cost == 1.0);

  const GraphPair ins = pad_pair(LabeledGraph{}, LabeledGraph({"a"}, {}));
  const auto ipath = extract_edit_path(ins, Permutation::identity(1), case1);
  REQUIRE(ipath.ops.size() == 1);
  CHECK(ipath.ops[0].kind == EditKind::node_insert);
  CHECK(ipath.ops[0].to_label == "a");
  CHECK(ipath.total_cost == 3.0);

  const auto json = to_json(ipath);
  CHECK(json["total_cost"] == 3.0);
  CHECK(json["ops"][0]["kind"] == "node_insert");
}

TEST_CASE("exact_ged examples") {
  const auto case1 = CostModel::builtin(CostSetting::case1);
  const auto case3 = CostModel::builtin(CostSetting::case3);

  const auto same = exact_ged(kTriangle, kTriangle, case3);
  CHECK(same.ged == 0.0);
  CHECK(same.optimal_mapping.is_identity());

  CHECK(exact_ged(kTriangle, kPath3, case3).ged == 1.0);

  const auto k2 = exact_ged(LabeledGraph({"a", "b"}, {{0, 1}}), LabeledGraph({"a", "b"}, {}), case1);
  CHECK(k2.ged == 2.0);
  CHECK(k2.optimal_mapping.is_identity());

  CHECK(exact_ged(LabeledGraph{}, LabeledGraph{}, case1).ged == 0.0);
  CHECK(exact_ged(LabeledGraph{}, LabeledGraph({"a"}, {}), case1).ged == 3.0);
  CHECK(exact_ged(LabeledGraph({"a"}, {}), LabeledGraph{}, case1).ged == 1.0);

  std::vector<std::string> ten(10, "a");
  CHECK_THROWS_AS(exact_ged(LabeledGraph(ten, {}), LabeledGraph{}, case1), BudgetError);
  CHECK_NOTHROW(exact_ged(LabeledGraph(ten, {}), LabeledGraph({"a"}, {}), case3, 10));
}

TEST_CASE("edit paths agree with mapping costs and replay to g2") {
  std::mt19937_64 rng(31);
  const std::vector<std::string> alphabet = {"1", "2", "4", "7"};
  for (auto setting : {CostSetting::case1, CostSetting::case2, CostSetting::case3}) {
    const CostModel cm = CostModel::builtin(setting);
    for (int trial = 0; trial < 60; ++trial) {
      const auto g1 = testutil::random_graph(rng, trial % 8, 0.4, alphabet);
      const auto g2 = testutil::random_graph(rng, (trial * 3) % 8, 0.4, alphabet);
      const GraphPair pair = pad_pair(g1, g2);
      const Permutation pi = testutil::random_permutation(rng, pair.order());
      const EditPath path = extract_edit_path(pair, pi, cm);
      CHECK(path.total_cost == ged_under_mapping(pair, pi, cm));
      double sum = 0.0;
      for (const auto& op : path.ops) sum += op.cost;
      CHECK(sum == doctest::Approx(path.total_cost));
      CHECK(replay_matches(pair, pi, path));
    }
  }
}

TEST_CASE("exact_ged is the minimum over mappings") {
  std::mt19937_64 rng(32);
  const CostModel cm = CostModel::builtin(CostSetting::case1);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g1 = testutil::random_graph(rng, 2 + trial % 5, 0.5, {"a", "b"});
    const auto g2 = testutil::random_graph(rng, 2 + (trial / 5) % 5, 0.5, {"a", "b"});
    const GraphPair pair = pad_pair(g1, g2);
    const auto ex = exact_ged(pair, cm);
    CHECK(ex.ged == ged_under_mapping(pair, ex.optimal_mapping, cm));
    for (const auto& p : testutil::all_permutations(pair.order()))
      CHECK(ex.ged <= ged_under_mapping(pair, Permutation(p), cm));
  }
}

TEST_CASE("custom cost file flows through the oracle") {
  const auto cm = CostModel::parse(R"({
    "edge_cost_squared": 0.5,
    "node_insert": {"default": 4},
    "node_delete": {"default": 4},
    "node_substitute": {"default": 10, "pairs": [["C", "N", 1]]}
  })");
  // C-C vs N-C: substituting C->N (1) beats deleting and inserting (8).
  const auto ex = exact_ged(LabeledGraph({"C", "C"}, {{0, 1}}), LabeledGraph({"N", "C"}, {{0, 1}}), cm);
  CHECK(ex.ged == 1.0);
}
