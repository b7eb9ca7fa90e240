#include "ged/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ged/error.hpp"

namespace ged {

namespace {

void check_shapes(const ScaledPair& sp, const Matrix& d, const Matrix& p) {
  const std::size_t n = sp.a.rows();
  auto ok = [n](const Matrix& m) { return m.rows() == n && m.cols() == n; };
  if (!ok(sp.a) || !ok(sp.b) || !ok(d) || !ok(p))
    throw InputError("kernel: dimension mismatch");
}

// ÃP − PB̃
Matrix residual(const ScaledPair& sp, const Matrix& p) {
  return sp.a * p - p * sp.b;
}

// Row and column sums minus one.
void sum_violations(const Matrix& p, std::vector<double>& rows,
                    std::vector<double>& cols) {
  const std::size_t n = p.rows();
  rows.assign(n, -1.0);
  cols.assign(n, -1.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      rows[i] += p(i, j);
      cols[j] += p(i, j);
    }
}

double penalty(const Matrix& p) {
  std::vector<double> r, c;
  sum_violations(p, r, c);
  double s = 0.0;
  for (double x : r) s += x * x;
  for (double x : c) s += x * x;
  return s;
}

}  // namespace

ScaledPair scale_pair(const GraphPair& pair, double kappa) {
  return ScaledPair{adjacency(pair.g1) * kappa, adjacency(pair.g2) * kappa};
}

double objective(const ScaledPair& sp, const Matrix& d, const Matrix& p,
                 const ObjectiveParams& params) {
  check_shapes(sp, d, p);
  return 0.5 * frobenius_sq(residual(sp, p)) + params.mu * inner(p, d) +
         params.lambda * quasi_perm_residual(p);
}

double penalized_objective(const ScaledPair& sp, const Matrix& d,
                           const Matrix& p, const ObjectiveParams& params) {
  return objective(sp, d, p, params) + params.sigma * penalty(p);
}

Evaluation evaluate(const ScaledPair& sp, const Matrix& d, const Matrix& p,
                    const ObjectiveParams& params) {
  check_shapes(sp, d, p);
  const std::size_t n = p.rows();
  const Matrix r = residual(sp, p);
  std::vector<double> rows, cols;
  sum_violations(p, rows, cols);

  Evaluation ev;
  double pen = 0.0;
  for (double x : rows) pen += x * x;
  for (double x : cols) pen += x * x;
  ev.value = 0.5 * frobenius_sq(r) + params.mu * inner(p, d) +
             params.lambda * quasi_perm_residual(p) + params.sigma * pen;

  ev.grad = sp.a * r - r * sp.b;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      ev.grad(i, j) += params.mu * d(i, j) +
                       params.lambda * (1.0 - 2.0 * p(i, j)) +
                       2.0 * params.sigma * (rows[i] + cols[j]);
  return ev;
}

Matrix gradient(const ScaledPair& sp, const Matrix& d, const Matrix& p,
                const ObjectiveParams& params) {
  return evaluate(sp, d, p, params).grad;
}

double quasi_perm_residual(const Matrix& p) {
  double s = 0.0;
  for (double x : p.data()) s += x * (1.0 - x);
  return s;
}

double doubly_stochastic_violation(const Matrix& p) {
  std::vector<double> r, c;
  sum_violations(p, r, c);
  double m = 0.0;
  for (double x : r) m = std::max(m, std::abs(x));
  for (double x : c) m = std::max(m, std::abs(x));
  return m;
}

std::pair<ScaledPair, Matrix> relabel_transform(const ScaledPair& sp,
                                                const Matrix& d,
                                                const Permutation& h) {
  const std::size_t n = sp.order();
  if (h.size() != n || d.rows() != n || d.cols() != n)
    throw InputError("relabel_transform: dimension mismatch");
  // (HᵀXH)(i, j) = X(h⁻¹(i), h⁻¹(j)) and (HᵀD)(i, j) = D(h⁻¹(i), j).
  const Permutation inv = h.inverse();
  ScaledPair out{Matrix(n, n), sp.b};
  Matrix dt(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      out.a(i, j) = sp.a(inv[i], inv[j]);
      dt(i, j) = d(inv[i], j);
    }
  return {std::move(out), std::move(dt)};
}

Matrix relabel_alignment(const Matrix& p, const Permutation& h) {
  const std::size_t n = p.rows();
  if (h.size() != n) throw InputError("relabel_alignment: dimension mismatch");
  const Permutation inv = h.inverse();
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = p(inv[i], j);
  return out;
}

std::vector<double> symmetric_eigenvalues(const Matrix& m, double tol,
                                          int max_sweeps) {
  if (!m.square()) throw InputError("eigenvalues: matrix must be square");
  const std::size_t n = m.rows();
  Matrix a = m;
  const double scale = std::max(1.0, std::sqrt(frobenius_sq(a)));
  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
  };

  int sweep = 0;
  while (off_norm() > tol * scale) {
    if (sweep++ >= max_sweeps)
      throw SolverError("Jacobi eigensolver did not converge");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a(i, i);
  std::sort(ev.begin(), ev.end());
  return ev;
}

double convexity_lambda_bound(const ScaledPair& sp) {
  const auto ea = symmetric_eigenvalues(sp.a);
  const auto eb = symmetric_eigenvalues(sp.b);
  double best = std::numeric_limits<double>::infinity();
  for (double x : ea)
    for (double y : eb) best = std::min(best, 0.5 * (x - y) * (x - y));
  return ea.empty() ? 0.0 : best;
}

}  // namespace ged
