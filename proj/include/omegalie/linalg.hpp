#pragma once

// Exact Gaussian elimination over Q(w). Pivots are the first nonzero entry
// in each column; there is no magnitude pivoting in an exact field.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "omegalie/matrix.hpp"

namespace omegalie {

class SingularBasis : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class OutOfSpan : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Rank of the matrix whose rows are given.
std::size_t rank(std::vector<Vec> rows);

/// Basis of {x : sum_j rows[i][j] x_j = 0 for all i}, x of length `cols`.
std::vector<Vec> null_space(std::vector<Vec> rows, std::size_t cols);

/// Coordinates of each target in the basis given by `columns` (all vectors
/// of one ambient length). Throws SingularBasis if the columns are dependent,
/// OutOfSpan if some target has a nonzero residual.
std::vector<Vec> solve_in_basis(const std::vector<Vec>& columns, const std::vector<Vec>& targets);

}  // namespace omegalie
