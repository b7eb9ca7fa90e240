#include "ged/solver.hpp"

#include <cmath>
#include <limits>

#include "ged/assignment.hpp"
#include "ged/error.hpp"

namespace ged {

void SolverConfig::validate() const {
  auto positive = [](double x, const char* name) {
    if (!(x > 0) || !std::isfinite(x))
      throw InputError(std::string(name) + " must be positive and finite");
  };
  auto non_negative = [](double x, const char* name) {
    if (!(x >= 0) || !std::isfinite(x))
      throw InputError(std::string(name) + " must be non-negative and finite");
  };
  non_negative(mu, "mu");
  positive(alpha, "alpha");
  non_negative(lambda_step, "lambda_step");
  non_negative(inner_tol, "inner_tol");
  positive(sigma_init, "sigma_init");
  positive(sigma_growth, "sigma_growth");
  positive(sigma_cap, "sigma_cap");
  positive(adam_eps, "adam_eps");
  if (!(adam_beta1 >= 0 && adam_beta1 < 1)) throw InputError("adam_beta1 must lie in [0, 1)");
  if (!(adam_beta2 >= 0 && adam_beta2 < 1)) throw InputError("adam_beta2 must lie in [0, 1)");
  if (lambda_max_rounds < 1) throw InputError("lambda_max_rounds must be at least 1");
  if (patience < 1) throw InputError("patience must be at least 1");
  if (inner_max_iters < 1) throw InputError("inner_max_iters must be at least 1");
}

const char* to_string(StopReason reason) {
  switch (reason) {
    case StopReason::patience_exhausted: return "patience_exhausted";
    case StopReason::lambda_rounds_exhausted: return "lambda_rounds_exhausted";
    case StopReason::divergence_detected: return "divergence_detected";
  }
  return "unknown";
}

bool adam_step(Matrix& p, const Matrix& grad, AdamState& state,
               const SolverConfig& cfg) {
  for (double g : grad.data())
    if (!std::isfinite(g)) return false;
  ++state.step;
  const double b1 = cfg.adam_beta1, b2 = cfg.adam_beta2;
  const double c1 = 1.0 - std::pow(b1, static_cast<double>(state.step));
  const double c2 = 1.0 - std::pow(b2, static_cast<double>(state.step));
  auto pd = p.data();
  auto gd = grad.data();
  auto md = state.m.data();
  auto vd = state.v.data();
  for (std::size_t k = 0; k < pd.size(); ++k) {
    md[k] = b1 * md[k] + (1.0 - b1) * gd[k];
    vd[k] = b2 * vd[k] + (1.0 - b2) * gd[k] * gd[k];
    const double m_hat = md[k] / c1;
    const double v_hat = vd[k] / c2;
    pd[k] = std::clamp(pd[k] - cfg.alpha * m_hat / (std::sqrt(v_hat) + cfg.adam_eps),
                       0.0, 1.0);
  }
  return true;
}

InnerResult inner_minimize(const ScaledPair& sp, const Matrix& d,
                           const Matrix& p0, const ObjectiveParams& params,
                           const SolverConfig& cfg) {
  InnerResult best{p0, 0.0, 0, false};
  Matrix p = p0;
  AdamState state(p.rows());
  Evaluation ev = evaluate(sp, d, p, params);
  best.value = ev.value;
  if (!std::isfinite(ev.value)) {
    best.diverged = true;
    return best;
  }
  double prev = ev.value;
  for (int it = 1; it <= cfg.inner_max_iters; ++it) {
    best.iterations = it;
    if (!adam_step(p, ev.grad, state, cfg)) {
      best.diverged = true;
      break;
    }
    ev = evaluate(sp, d, p, params);
    if (!std::isfinite(ev.value)) {
      best.diverged = true;
      break;
    }
    if (ev.value < best.value) {
      best.value = ev.value;
      best.p = p;
    }
    if (std::abs(prev - ev.value) < cfg.inner_tol) break;
    prev = ev.value;
  }
  return best;
}

SolveReport m_adam(const GraphPair& pair, const CostModel& cm,
                   const SolverConfig& cfg) {
  cfg.validate();
  if (pair.g1.order() != pair.g2.order())
    throw InputError("m_adam: pair is not padded to a common order");
  const std::size_t n = pair.order();
  const PairCosts costs = cm.for_pair(pair);

  SolveReport report;
  report.n1 = pair.g1.real_order();
  report.n2 = pair.g2.real_order();
  report.permutation = Permutation::identity(n);

  ScaledPair sp = scale_pair(pair, cm.kappa());
  Matrix d = build_cost_matrix(pair, cm);
  Matrix p = Matrix::identity(n);
  Permutation accumulated = Permutation::identity(n);
  ObjectiveParams params{cfg.mu, 0.0, cfg.sigma_init};

  double best = std::numeric_limits<double>::infinity();
  int stale = 0;
  report.reason = StopReason::lambda_rounds_exhausted;

  for (int round = 0; round < cfg.lambda_max_rounds; ++round) {
    InnerResult inner = inner_minimize(sp, d, p, params, cfg);
    if (inner.diverged) {
      report.reason = StopReason::divergence_detected;
      break;
    }
    const Permutation h = round_to_permutation(inner.p);
    // Without recentering P lives in the original coordinates, so H already
    // is the candidate mapping.
    const Permutation candidate =
        cfg.enable_inverse_relabel ? accumulated.then(h) : h;
    const double cost = ged_under_mapping(pair, candidate, costs);
    report.trace.push_back(
        {params.lambda, params.sigma, inner.iterations, cost, inner.value});

    if (cost < best) {
      best = cost;
      report.permutation = candidate;
      stale = 0;
    } else {
      ++stale;
    }

    if (cfg.enable_inverse_relabel) {
      auto [sp_next, d_next] = relabel_transform(sp, d, h);
      sp = std::move(sp_next);
      d = std::move(d_next);
      p = relabel_alignment(inner.p, h);
      accumulated = candidate;
    } else {
      p = std::move(inner.p);
    }
    if (cfg.enable_regularizer) params.lambda += cfg.lambda_step;
    params.sigma = std::min(params.sigma * cfg.sigma_growth, cfg.sigma_cap);

    if (stale >= cfg.patience) {
      report.reason = StopReason::patience_exhausted;
      break;
    }
  }

  if (!std::isfinite(best)) {
    // Diverged before the first candidate: fall back to the identity mapping,
    // still a valid upper bound.
    best = ged_under_mapping(pair, report.permutation, costs);
  }
  report.estimated_ged = best;
  report.edit_path = extract_edit_path(pair, report.permutation, cm);
  return report;
}

SolveReport estimate_ged(const LabeledGraph& g1, const LabeledGraph& g2,
                         const CostModel& cm, const SolverConfig& cfg) {
  return m_adam(pad_pair(g1, g2), cm, cfg);
}

nlohmann::json to_json(const SolveReport& report) {
  using nlohmann::json;
  json mapping = json::array();
  const std::size_t n = report.permutation.size();
  for (std::size_t i = 0; i < n; ++i) {
    mapping.push_back({{"g1_node", i},
                       {"g2_node", report.permutation[i]},
                       {"g1_dummy", i >= report.n1},
                       {"g2_dummy", report.permutation[i] >= report.n2}});
  }
  json trace = json::array();
  for (const RoundRecord& r : report.trace) {
    trace.push_back({{"lambda", r.lambda},
                     {"sigma", r.sigma},
                     {"inner_iterations", r.inner_iterations},
                     {"candidate_ged", r.candidate_ged},
                     {"objective", r.objective}});
  }
  return {{"estimated_ged", report.estimated_ged},
          {"n1", report.n1},
          {"n2", report.n2},
          {"mapping", std::move(mapping)},
          {"edit_path", to_json(report.edit_path)},
          {"trace", std::move(trace)},
          {"stop_reason", to_string(report.reason)}};
}

}  // namespace ged
