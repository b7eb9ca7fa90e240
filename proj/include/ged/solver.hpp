#pragma once

#include <cstddef>
#include <vector>

#include "json.hpp"

#include "ged/cost_model.hpp"
#include "ged/edit_path.hpp"
#include "ged/graph.hpp"
#include "ged/kernel.hpp"
#include "ged/permutation.hpp"

namespace ged {

struct SolverConfig {
  double mu = 1.0;
  double alpha = 0.001;
  double lambda_step = 0.5;
  int lambda_max_rounds = 20;
  int patience = 3;
  double inner_tol = 1e-7;
  int inner_max_iters = 20000;
  double sigma_init = 1.0;
  double sigma_growth = 10.0;
  double sigma_cap = 1e3;
  double adam_beta1 = 0.9;
  double adam_beta2 = 0.999;
  double adam_eps = 1e-8;
  // false: λ stays 0, every candidate is a rounded doubly stochastic solution.
  bool enable_regularizer = true;
  // false: keep optimizing in the original coordinates.
  bool enable_inverse_relabel = true;

  /// Throws InputError on non-positive step sizes, patience < 1, etc.
  void validate() const;
};

struct AdamState {
  Matrix m;
  Matrix v;
  long step = 0;

  explicit AdamState(std::size_t n = 0) : m(n, n), v(n, n) {}
};

/// One bias-corrected Adam step followed by clipping every entry to [0, 1].
/// Returns false (leaving p untouched) if the gradient has a non-finite entry.
bool adam_step(Matrix& p, const Matrix& grad, AdamState& state,
               const SolverConfig& cfg);

struct InnerResult {
  Matrix p;
  double value = 0.0;  // penalized objective at p
  int iterations = 0;
  bool diverged = false;
};

/// Adam on the penalized objective from p0 until two successive values differ
/// by less than cfg.inner_tol or cfg.inner_max_iters is hit. The best iterate
/// seen (p0 included) is returned, so value never exceeds the value at p0.
InnerResult inner_minimize(const ScaledPair& sp, const Matrix& d,
                           const Matrix& p0, const ObjectiveParams& params,
                           const SolverConfig& cfg);

enum class StopReason {
  patience_exhausted,
  lambda_rounds_exhausted,
  divergence_detected
};

const char* to_string(StopReason reason);

struct RoundRecord {
  double lambda = 0.0;
  double sigma = 0.0;
  int inner_iterations = 0;
  double candidate_ged = 0.0;
  double objective = 0.0;  // penalized objective at the end of the round
};

struct SolveReport {
  double estimated_ged = 0.0;
  Permutation permutation;  // padded g1 index -> padded g2 index
  std::size_t n1 = 0;       // real node counts before padding
  std::size_t n2 = 0;
  EditPath edit_path;
  std::vector<RoundRecord> trace;
  StopReason reason = StopReason::lambda_rounds_exhausted;
};

/// Modified Adam: alternate penalized Adam minimization with Hungarian
/// rounding, recentering the problem on each rounded permutation and raising
/// λ between rounds. Reports the best rounded candidate. Deterministic.
SolveReport m_adam(const GraphPair& pair, const CostModel& cm,
                   const SolverConfig& cfg = {});

/// pad_pair followed by m_adam.
SolveReport estimate_ged(const LabeledGraph& g1, const LabeledGraph& g2,
                         const CostModel& cm, const SolverConfig& cfg = {});

nlohmann::json to_json(const SolveReport& report);

}  // namespace ged
