#include "ged/assignment.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "ged/error.hpp"

namespace ged {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct DualSolution {
  std::vector<double> u;  // row potentials
  std::vector<double> v;  // column potentials
  std::vector<std::size_t> row_to_col;
};

// Shortest augmenting path Hungarian method (Jonker-Volgenant style
// potentials), minimizing. Rows are inserted in index order.
DualSolution hungarian_min(const Matrix& c) {
  const std::size_t n = c.rows();
  // 1-based internally; index 0 is the virtual root column.
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<std::size_t> match(n + 1, 0), way(n + 1, 0);
  std::vector<double> minv(n + 1);
  std::vector<char> used(n + 1);

  for (std::size_t i = 1; i <= n; ++i) {
    match[0] = i;
    std::size_t j0 = 0;
    std::fill(minv.begin(), minv.end(), kInf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = match[j0];
      double delta = kInf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = c(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  DualSolution sol;
  sol.u.assign(u.begin() + 1, u.end());
  sol.v.assign(v.begin() + 1, v.end());
  sol.row_to_col.assign(n, 0);
  for (std::size_t j = 1; j <= n; ++j) sol.row_to_col[match[j] - 1] = j - 1;
  return sol;
}

// Every optimal assignment uses only edges that are tight under an optimal
// dual, so the lexicographically smallest optimum is the lexicographically
// smallest perfect matching of the tight subgraph. Rows are fixed in order;
// row i takes the smallest tight column that still leaves a perfect matching
// of the remaining rows, found by an alternating path.
std::vector<std::size_t> lexicographic_optimum(const Matrix& c,
                                               const DualSolution& dual) {
  const std::size_t n = c.rows();
  double scale = 1.0;
  for (double x : c.data()) scale = std::max(scale, std::abs(x));
  const double tol = 1e-12 * scale * static_cast<double>(n + 1);

  std::vector<std::size_t> row_to_col = dual.row_to_col;
  std::vector<std::size_t> col_to_row(n);
  for (std::size_t i = 0; i < n; ++i) col_to_row[row_to_col[i]] = i;

  std::vector<char> tight(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      tight[i * n + j] = std::abs(c(i, j) - dual.u[i] - dual.v[j]) <= tol;
    tight[i * n + row_to_col[i]] = 1;
  }

  std::vector<char> fixed_col(n, 0);
  std::vector<std::size_t> parent_row(n);
  std::vector<char> seen(n);
  std::vector<std::size_t> queue;
  queue.reserve(n);

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (fixed_col[j] || !tight[i * n + j]) continue;
      if (row_to_col[i] == j) break;
      // Row r gives up column j; look for an alternating path from r, over
      // unfixed rows other than i, that ends at column row_to_col[i].
      const std::size_t freed = row_to_col[i];
      const std::size_t r = col_to_row[j];
      std::fill(seen.begin(), seen.end(), 0);
      seen[j] = 1;
      queue.assign(1, r);
      bool found = false;
      std::size_t end_col = 0;
      for (std::size_t head = 0; head < queue.size() && !found; ++head) {
        const std::size_t row = queue[head];
        for (std::size_t col = 0; col < n; ++col) {
          if (fixed_col[col] || seen[col] || !tight[row * n + col]) continue;
          seen[col] = 1;
          parent_row[col] = row;
          if (col == freed) {
            found = true;
            end_col = col;
            break;
          }
          queue.push_back(col_to_row[col]);
        }
      }
      if (!found) continue;
      // Shift assignments back along the path.
      std::size_t col = end_col;
      while (true) {
        const std::size_t row = parent_row[col];
        const std::size_t prev = row_to_col[row];
        row_to_col[row] = col;
        col_to_row[col] = row;
        if (row == r) break;
        col = prev;
      }
      row_to_col[i] = j;
      col_to_row[j] = i;
      break;
    }
    fixed_col[row_to_col[i]] = 1;
  }
  return row_to_col;
}

}  // namespace

Permutation solve_assignment(const Matrix& cost, Sense sense) {
  if (!cost.square()) throw InputError("assignment: cost matrix must be square");
  for (double x : cost.data())
    if (!std::isfinite(x)) throw InputError("assignment: non-finite cost entry");
  Matrix c = sense == Sense::maximize ? cost * -1.0 : cost;
  if (c.rows() == 0) return Permutation{};
  const DualSolution dual = hungarian_min(c);
  return Permutation(lexicographic_optimum(c, dual));
}

Permutation round_to_permutation(const Matrix& p) {
  return solve_assignment(p, Sense::maximize);
}

double assignment_total(const Matrix& cost, const Permutation& pi) {
  double s = 0.0;
  for (std::size_t i = 0; i < pi.size(); ++i) s += cost(i, pi[i]);
  return s;
}

}  // namespace ged
