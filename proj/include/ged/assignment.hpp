#pragma once

#include "ged/matrix.hpp"
#include "ged/permutation.hpp"

namespace ged {

enum class Sense { minimize, maximize };

/// Exact linear assignment on a square matrix (shortest augmenting paths,
/// O(n³)). Among all optimal assignments the lexicographically smallest
/// mapping is returned. Throws InputError on non-finite entries or a
/// non-square matrix.
Permutation solve_assignment(const Matrix& cost, Sense sense);

/// Hungarian rounding: the permutation H maximizing tr(HᵀP).
Permutation round_to_permutation(const Matrix& p);

/// Σ_i cost(i, π(i)), accumulated in row order.
double assignment_total(const Matrix& cost, const Permutation& pi);

}  // namespace ged
