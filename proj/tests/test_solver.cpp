#include <cmath>
#include <random>

#include "doctest.h"
#include "test_util.hpp"

#include "ged/assignment.hpp"
#include "ged/edit_path.hpp"
#include "ged/error.hpp"
#include "ged/solver.hpp"

using namespace ged;

namespace {

const LabeledGraph kTriangle({"a", "a", "a"}, {{0, 1}, {1, 2}, {0, 2}});
const LabeledGraph kPath3({"a", "a", "a"}, {{0, 1}, {1, 2}});

}  // namespace

TEST_CASE("adam_step") {
  SolverConfig cfg;
  Matrix p(2, 2, 0.5);
  AdamState st(2);
  CHECK(adam_step(p, Matrix(2, 2), st, cfg));
  CHECK(p == Matrix(2, 2, 0.5));

  // Constant positive gradient: entry decreases every step.
  Matrix q(1, 1, 0.5);
  AdamState s1(1);
  double prev = q(0, 0);
  for (int k = 0; k < 20; ++k) {
    adam_step(q, Matrix(1, 1, 3.0), s1, cfg);
    CHECK(q(0, 0) < prev);
    prev = q(0, 0);
  }
  // First bias-corrected step moves by α.
  Matrix r(1, 1, 0.5);
  AdamState s2(1);
  adam_step(r, Matrix(1, 1, 3.0), s2, cfg);
  CHECK(r(0, 0) == doctest::Approx(0.5 - cfg.alpha).epsilon(1e-9));

  // Projection to the box.
  Matrix low(1, 1, 0.0005);
  AdamState s3(1);
  adam_step(low, Matrix(1, 1, 1.0), s3, cfg);
  CHECK(low(0, 0) == 0.0);
  Matrix high(1, 1, 0.9995);
  AdamState s4(1);
  adam_step(high, Matrix(1, 1, -1.0), s4, cfg);
  CHECK(high(0, 0) == 1.0);

  Matrix nan_grad(1, 1, std::nan(""));
  Matrix z(1, 1, 0.3);
  AdamState s5(1);
  CHECK_FALSE(adam_step(z, nan_grad, s5, cfg));
  CHECK(z(0, 0) == 0.3);
}

TEST_CASE("inner_minimize") {
  SolverConfig cfg;
  const GraphPair same = pad_pair(kTriangle, kTriangle);
  const ScaledPair sp = scale_pair(same, 1.0);
  const Matrix d(3, 3);
  const auto at_opt = inner_minimize(sp, d, Matrix::identity(3), {1.0, 0.0, 1.0}, cfg);
  CHECK(at_opt.iterations == 1);
  CHECK(at_opt.value == 0.0);
  CHECK(at_opt.p == Matrix::identity(3));

  // K2 vs two isolated nodes: the relaxation can do better than the identity.
  const GraphPair k2 = pad_pair(LabeledGraph({"a", "a"}, {{0, 1}}), LabeledGraph({"a", "a"}, {}));
  const ScaledPair sk = scale_pair(k2, 1.0);
  const ObjectiveParams params{1.0, 0.0, 1000.0};
  const double at_identity = penalized_objective(sk, Matrix(2, 2), Matrix::identity(2), params);
  const auto res = inner_minimize(sk, Matrix(2, 2), Matrix::identity(2), params, cfg);
  CHECK(res.value <= at_identity);
  CHECK(res.value == doctest::Approx(penalized_objective(sk, Matrix(2, 2), res.p, params)));
  CHECK(doubly_stochastic_violation(res.p) < 1e-2);

  // Never worse than the start, from random starts.
  std::mt19937_64 rng(41);
  SolverConfig short_cfg;
  short_cfg.inner_max_iters = 50;
  for (int trial = 0; trial < 10; ++trial) {
    const ScaledPair r{testutil::random_symmetric_01(rng, 5, 0.5, 1.0),
                       testutil::random_symmetric_01(rng, 5, 0.5, 1.0)};
    const Matrix dd = testutil::random_matrix(rng, 5, 5);
    const Matrix p0 = testutil::random_matrix(rng, 5, 5);
    const ObjectiveParams pr{1.0, 0.5 * trial, 10.0};
    const auto out = inner_minimize(r, dd, p0, pr, short_cfg);
    CHECK(out.value <= penalized_objective(r, dd, p0, pr) + short_cfg.inner_tol);
    for (double x : out.p.data()) CHECK((x >= 0.0 && x <= 1.0));
  }
}

TEST_CASE("estimate_ged examples") {
  const auto case1 = CostModel::builtin(CostSetting::case1);
  const auto case3 = CostModel::builtin(CostSetting::case3);

  for (auto s : {CostSetting::case1, CostSetting::case2, CostSetting::case3}) {
    const LabeledGraph g({"1", "2", "3", "1"}, {{0, 1}, {1, 2}, {2, 3}});
    const auto r = estimate_ged(g, g, CostModel::builtin(s));
    CHECK(r.estimated_ged == 0.0);
    CHECK(r.permutation.is_identity());
    CHECK(r.edit_path.ops.empty());
  }

  const auto tp = estimate_ged(kTriangle, kPath3, case3);
  CHECK(tp.estimated_ged == 1.0);
  CHECK(tp.estimated_ged == exact_ged(kTriangle, kPath3, case3).ged);

  // One missing edge, κ² = 2, free node edits.
  const LabeledGraph c4({"a", "a", "a", "a"}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  const LabeledGraph p4({"a", "a", "a", "a"}, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(estimate_ged(c4, p4, CostModel(0, 0, 0, 2)).estimated_ged == 2.0);

  CHECK(estimate_ged(LabeledGraph{}, LabeledGraph{}, case1).estimated_ged == 0.0);
  CHECK(estimate_ged(LabeledGraph{}, LabeledGraph({"a"}, {}), case1).estimated_ged == 3.0);
  CHECK(estimate_ged(LabeledGraph({"a"}, {}), LabeledGraph{}, case1).estimated_ged == 1.0);
}

TEST_CASE("solver postconditions on random pairs") {
  std::mt19937_64 rng(42);
  const std::vector<std::string> alphabet = {"1", "2", "3"};
  for (auto setting : {CostSetting::case1, CostSetting::case2, CostSetting::case3}) {
    const CostModel cm = CostModel::builtin(setting);
    for (int trial = 0; trial < 8; ++trial) {
      const auto g1 = testutil::random_graph(rng, 3 + trial % 5, 0.4, alphabet);
      const auto g2 = testutil::random_graph(rng, 3 + (trial * 3) % 5, 0.4, alphabet);
      const GraphPair pair = pad_pair(g1, g2);
      for (bool relabel : {true, false}) {
        SolverConfig cfg;
        cfg.enable_inverse_relabel = relabel;
        const auto r = m_adam(pair, cm, cfg);
        CHECK(r.estimated_ged == ged_under_mapping(pair, r.permutation, cm));
        CHECK(r.estimated_ged == r.edit_path.total_cost);
        CHECK(r.estimated_ged >= exact_ged(pair, cm).ged - 1e-9);
        double best = std::numeric_limits<double>::infinity();
        for (const auto& t : r.trace) best = std::min(best, t.candidate_ged);
        CHECK(r.estimated_ged == best);
        CHECK(r.trace.size() <= static_cast<std::size_t>(cfg.lambda_max_rounds));
      }
    }
  }
}

TEST_CASE("solver is deterministic") {
  std::mt19937_64 rng(43);
  const auto g1 = testutil::random_graph(rng, 8, 0.4, {"1", "2"});
  const auto g2 = testutil::random_graph(rng, 7, 0.4, {"1", "2"});
  const CostModel cm = CostModel::builtin(CostSetting::case2);
  const auto a = to_json(estimate_ged(g1, g2, cm)).dump();
  const auto b = to_json(estimate_ged(g1, g2, cm)).dump();
  CHECK(a == b);
}

TEST_CASE("regularizer-free mode rounds lambda = 0 relaxations") {
  std::mt19937_64 rng(44);
  const auto g1 = testutil::random_graph(rng, 6, 0.5, {"a"});
  const auto g2 = testutil::random_graph(rng, 6, 0.5, {"a"});
  SolverConfig cfg;
  cfg.enable_regularizer = false;
  const auto r = estimate_ged(g1, g2, CostModel::builtin(CostSetting::case3), cfg);
  for (const auto& t : r.trace) CHECK(t.lambda == 0.0);

  // Single round: the report is the Hungarian rounding of the λ = 0 solution.
  cfg.lambda_max_rounds = 1;
  const GraphPair pair = pad_pair(g1, g2);
  const auto cm = CostModel::builtin(CostSetting::case3);
  const auto one = m_adam(pair, cm, cfg);
  const auto relaxed = inner_minimize(scale_pair(pair, cm.kappa()), build_cost_matrix(pair, cm),
                                      Matrix::identity(pair.order()),
                                      {cfg.mu, 0.0, cfg.sigma_init}, cfg);
  CHECK(one.permutation == round_to_permutation(relaxed.p));
}

TEST_CASE("composed permutation agrees with a non-relabeled run") {
  // Both variants follow permuted copies of the same trajectory, so on a
  // pair with a unique optimum they must report the same mapping in
  // original indices.
  const LabeledGraph g1({"1", "2", "3", "4", "5"}, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  const LabeledGraph g2({"4", "2", "5", "1", "3"}, {{3, 1}, {1, 4}, {4, 0}, {0, 2}});
  const auto cm = CostModel::builtin(CostSetting::case2);
  SolverConfig with, without;
  without.enable_inverse_relabel = false;
  const auto a = estimate_ged(g1, g2, cm, with);
  const auto b = estimate_ged(g1, g2, cm, without);
  CHECK(a.estimated_ged == 0.0);
  CHECK(a.permutation == Permutation({3, 1, 4, 0, 2}));
  CHECK(a.permutation == b.permutation);
}

TEST_CASE("config validation and report JSON") {
  SolverConfig bad;
  bad.patience = 0;
  CHECK_THROWS_AS(bad.validate(), InputError);
  bad = {};
  bad.alpha = 0.0;
  CHECK_THROWS_AS(bad.validate(), InputError);

  const auto r = estimate_ged(LabeledGraph({"a"}, {}), LabeledGraph({"a", "b"}, {{0, 1}}),
                              CostModel::builtin(CostSetting::case1));
  const auto j = to_json(r);
  CHECK(j["estimated_ged"] == 5.0);  // insert b (3) + edge (2)
  CHECK(j["mapping"].size() == 2);
  CHECK(j["mapping"][1]["g1_dummy"] == true);
  CHECK(j["edit_path"]["total_cost"] == 5.0);
  CHECK(j.contains("trace"));
  CHECK(j.contains("stop_reason"));
}
