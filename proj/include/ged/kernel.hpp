#pragma once

#include <utility>

#include "ged/graph.hpp"
#include "ged/matrix.hpp"
#include "ged/permutation.hpp"

namespace ged {

/// Adjacency matrices scaled by κ, so squared entry differences price edge
/// edits at κ².
struct ScaledPair {
  Matrix a;
  Matrix b;

  std::size_t order() const { return a.rows(); }
};

ScaledPair scale_pair(const GraphPair& pair, double kappa);

struct ObjectiveParams {
  double mu = 1.0;
  double lambda = 0.0;
  double sigma = 0.0;
};

/// ½‖ÃP − PB̃‖²_F + μ·tr(PᵀD) + λ·tr(Pᵀ(J − P)).
double objective(const ScaledPair& sp, const Matrix& d, const Matrix& p,
                 const ObjectiveParams& params);

/// objective + σ·(‖P·1 − 1‖² + ‖Pᵀ·1 − 1‖²). Box constraints are left to
/// projection.
double penalized_objective(const ScaledPair& sp, const Matrix& d,
                           const Matrix& p, const ObjectiveParams& params);

/// Gradient of penalized_objective with respect to P. Assumes Ã and B̃ are
/// symmetric.
Matrix gradient(const ScaledPair& sp, const Matrix& d, const Matrix& p,
                const ObjectiveParams& params);

/// Penalized objective and its gradient from one residual computation.
struct Evaluation {
  double value = 0.0;
  Matrix grad;
};
Evaluation evaluate(const ScaledPair& sp, const Matrix& d, const Matrix& p,
                    const ObjectiveParams& params);

/// tr(Pᵀ(J − P)) = Σ p_ij (1 − p_ij). Zero exactly on 0/1 matrices.
double quasi_perm_residual(const Matrix& p);

/// Largest |row sum − 1| and |column sum − 1|.
double doubly_stochastic_violation(const Matrix& p);

/// Recenters the problem on a rounded permutation H: returns (HᵀÃH, B̃, HᵀD).
/// The objective at P on the inputs equals the objective at HᵀP on the
/// outputs. Entries are moved, never recomputed, so the map is exact.
std::pair<ScaledPair, Matrix> relabel_transform(const ScaledPair& sp,
                                                const Matrix& d,
                                                const Permutation& h);

/// HᵀP, the variable change paired with relabel_transform.
Matrix relabel_alignment(const Matrix& p, const Permutation& h);

/// min_ij (λ_i(Ã) − λ_j(B̃))² / 2. Diagnostic only; the solver never gates λ
/// on it.
double convexity_lambda_bound(const ScaledPair& sp);

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.
/// Throws SolverError if the off-diagonal norm does not fall below `tol`
/// within `max_sweeps`.
std::vector<double> symmetric_eigenvalues(const Matrix& m, double tol = 1e-10,
                                          int max_sweeps = 100);

}  // namespace ged
