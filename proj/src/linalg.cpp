#include "omegalie/linalg.hpp"

#include <string>
#include <utility>

namespace omegalie {

namespace {

// Reduces rows in place to reduced row echelon form on the first `cols`
// columns; returns the pivot column of each nonzero row.
std::vector<std::size_t> rref(std::vector<Vec>& rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c].is_zero()) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        const CycNum scale = rows[r][c].inv();
        for (auto& x : rows[r]) x = scale * x;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            const CycNum f = rows[i][c];
            for (std::size_t j = c; j < rows[i].size(); ++j)
                if (!rows[r][j].is_zero()) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t rank(std::vector<Vec> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    for (const auto& row : rows)
        if (row.size() != cols) throw DimensionMismatch("ragged matrix in rank computation");
    return rref(rows, cols).size();
}

std::vector<Vec> null_space(std::vector<Vec> rows, std::size_t cols) {
    for (const auto& row : rows)
        if (row.size() != cols) throw DimensionMismatch("ragged matrix in null space computation");
    const auto pivots = rref(rows, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<Vec> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vec x(cols);
        x[free] = CycNum(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -rows[r][free];
        basis.push_back(std::move(x));
    }
    return basis;
}

std::vector<Vec> solve_in_basis(const std::vector<Vec>& columns, const std::vector<Vec>& targets) {
    const std::size_t n = columns.size();
    if (n == 0) throw SingularBasis("empty basis");
    const std::size_t dim = columns.front().size();
    for (const auto& c : columns)
        if (c.size() != dim) throw DimensionMismatch("basis vectors of different lengths");
    for (const auto& t : targets)
        if (t.size() != dim) throw DimensionMismatch("target of wrong length");

    // augmented [columns | targets], one row per ambient coordinate
    std::vector<Vec> rows(dim, Vec(n + targets.size()));
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < n; ++j) rows[i][j] = columns[j][i];
        for (std::size_t t = 0; t < targets.size(); ++t) rows[i][n + t] = targets[t][i];
    }
    const auto pivots = rref(rows, n);
    if (pivots.size() < n)
        throw SingularBasis("basis has rank " + std::to_string(pivots.size()) + " < " + std::to_string(n));

    std::vector<Vec> out(targets.size(), Vec(n));
    for (std::size_t t = 0; t < targets.size(); ++t) {
        for (std::size_t r = n; r < dim; ++r)
            if (!rows[r][n + t].is_zero()) throw OutOfSpan("target " + std::to_string(t) + " is not in the span");
        for (std::size_t r = 0; r < n; ++r) out[t][r] = rows[r][n + t];
    }
    return out;
}

}  // namespace omegalie
