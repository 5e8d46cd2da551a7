#include "omegalie/structconst.hpp"

#include <stdexcept>
#include <utility>

namespace omegalie {

Tensor3::Tensor3(std::size_t n, Vec entries) : n_(n), data_(std::move(entries)) {
    if (data_.size() != n * n * n) throw DimensionMismatch("tensor needs n^3 entries");
}

Tensor3 slice(const Tensor13& c, std::size_t m) {
    const std::size_t n = c.dim();
    Tensor3 t(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = 0; l < n; ++l) t(i, k, l) = c(m, i, k, l);
    return t;
}

Tensor3 conj_slice(const Tensor13& c, std::size_t m) {
    const std::size_t n = c.dim();
    Tensor3 t(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = 0; l < n; ++l) t(i, k, l) = c.conj_constant(m, i, k, l);
    return t;
}

Tensor13 vector_algebra_constants(std::size_t n) {
    Tensor13 c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                if (k == i) c(j, i, j, k) += CycNum(1);
                if (i == j) c(k, i, j, k) += omega();
                if (j == k) c(i, i, j, k) += omega_bar();
            }
    return c;
}

OmegaSymmetryReport check_omega_symmetry(const Tensor13& c) {
    OmegaSymmetryReport rep;
    const std::size_t n = c.dim();
    for (std::size_t m = 0; m < n; ++m)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    const CycNum& x = c(m, i, k, l);
                    if (x != omega() * c(m, k, l, i)) rep.violations.push_back({m, i, k, l, "C_ikl = w C_kli"});
                    if (x != omega_bar() * c(m, l, i, k)) rep.violations.push_back({m, i, k, l, "C_ikl = wbar C_lik"});
                    const CycNum& y = c.conj_constant(m, i, k, l);
                    if (y != omega_bar() * c.conj_constant(m, k, l, i))
                        rep.violations.push_back({m, i, k, l, "Ct_ikl = wbar Ct_kli"});
                    if (y != omega() * c.conj_constant(m, l, i, k))
                        rep.violations.push_back({m, i, k, l, "Ct_ikl = w Ct_lik"});
                }
    return rep;
}

FundamentalReport check_fundamental(const Tensor13& c) {
    const std::size_t n = c.dim();
    FundamentalReport rep;
    if (n == 0) return rep;

    // d[(((((i k) l) r) s) p)] = sum_m C^m_ikl C^p_mrs
    std::vector<CycNum> d(n * n * n * n * n * n);
    auto idx = [n](std::size_t i, std::size_t k, std::size_t l, std::size_t r, std::size_t s, std::size_t p) {
        return ((((i * n + k) * n + l) * n + r) * n + s) * n + p;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = 0; l < n; ++l)
                for (std::size_t m = 0; m < n; ++m) {
                    const CycNum& a = c(m, i, k, l);
                    if (a.is_zero()) continue;
                    for (std::size_t r = 0; r < n; ++r)
                        for (std::size_t s = 0; s < n; ++s)
                            for (std::size_t p = 0; p < n; ++p) {
                                const CycNum& b = c(p, m, r, s);
                                if (!b.is_zero()) d[idx(i, k, l, r, s, p)] += a * b;
                            }
                }
    auto four = [&](std::size_t i, std::size_t k, std::size_t l, std::size_t r, std::size_t s, std::size_t p) {
        return d[idx(i, k, l, r, s, p)] + d[idx(i, r, k, s, l, p)] + d[idx(i, s, r, l, k, p)] +
               d[idx(i, l, s, k, r, p)];
    };

    std::array<std::size_t, 5> x{};
    const std::size_t total = n * n * n * n * n;
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t rest = code;
        for (std::size_t q = 5; q-- > 0;) {
            x[q] = rest % n;
            rest /= n;
        }
        for (std::size_t p = 0; p < n; ++p) {
            CycNum sum;
            for (std::size_t shift = 0; shift < 5; ++shift)
                sum += four(x[shift], x[(shift + 1) % 5], x[(shift + 2) % 5], x[(shift + 3) % 5], x[(shift + 4) % 5], p);
            ++rep.equations;
            if (!sum.is_zero()) {
                ++rep.violations;
                if (!rep.witness) rep.witness = FundamentalWitness{x, p, sum};
            }
        }
    }
    return rep;
}

Tensor13 random_omega_symmetric(Sampler& s, std::size_t n) {
    Tensor13 c(n);
    for (std::size_t m = 0; m < n; ++m)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    if (i == k && k == l) continue;
                    // one representative per cyclic orbit: the lexicographically least rotation
                    const std::array<std::size_t, 3> t{i, k, l}, u{k, l, i}, v{l, i, k};
                    if (u < t || v < t) continue;
                    const CycNum x = s.cyc();
                    c(m, i, k, l) = x;
                    c(m, k, l, i) = omega_bar() * x;
                    c(m, l, i, k) = omega() * x;
                }
    return c;
}

std::string to_string(CyclicLabel label) {
    switch (label) {
        case CyclicLabel::Trivial: return "trivial";
        case CyclicLabel::Omega: return "omega";
        case CyclicLabel::OmegaBar: return "omega-bar";
    }
    return "?";
}

CycNum rho_eigenvalue(CyclicLabel label) {
    switch (label) {
        case CyclicLabel::Trivial: return CycNum(1);
        case CyclicLabel::Omega: return omega_bar();
        case CyclicLabel::OmegaBar: return omega();
    }
    return CycNum(1);
}

Tensor3 cycle_subscripts(const Tensor3& t) {
    const std::size_t n = t.dim();
    Tensor3 out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) out(i, j, k) = t(j, k, i);
    return out;
}

Tensor3 project(const Tensor3& t, CyclicLabel label) {
    const CycNum lam = rho_eigenvalue(label);
    const Tensor3 r1 = cycle_subscripts(t);
    const Tensor3 r2 = cycle_subscripts(r1);
    return CycNum(Rat(1, 3)) * (t + lam.conj() * r1 + lam * r2);
}

namespace {

// rho as an n^3 x n^3 matrix: (rho T)[(i,j,k)] = T[(j,k,i)]
Matrix rho_matrix(std::size_t n) {
    const std::size_t n3 = n * n * n;
    Matrix m(n3, n3);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) m((i * n + j) * n + k, (j * n + k) * n + i) = CycNum(1);
    return m;
}

std::vector<Vec> matrix_rows(const Matrix& m) {
    std::vector<Vec> rows(m.rows(), Vec(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
    return rows;
}

// 3n linear functionals: the three single-pair traces for each free index.
std::vector<Vec> trace_rows(std::size_t n) {
    const std::size_t n3 = n * n * n;
    std::vector<Vec> rows;
    for (std::size_t k = 0; k < n; ++k) {
        Vec a(n3), b(n3), c(n3);
        for (std::size_t i = 0; i < n; ++i) {
            a[(i * n + i) * n + k] = CycNum(1);
            b[(i * n + k) * n + i] = CycNum(1);
            c[(k * n + i) * n + i] = CycNum(1);
        }
        rows.push_back(std::move(a));
        rows.push_back(std::move(b));
        rows.push_back(std::move(c));
    }
    return rows;
}

std::vector<Vec> eigen_rows(std::size_t n, CyclicLabel label) {
    const Matrix r = rho_matrix(n);
    return matrix_rows(r - rho_eigenvalue(label) * Matrix::identity(n * n * n));
}

}  // namespace

CyclicProjectors cyclic_projectors(std::size_t n) {
    const Matrix id = Matrix::identity(n * n * n);
    const Matrix r1 = rho_matrix(n);
    const Matrix r2 = r1 * r1;
    auto make = [&](CyclicLabel label) {
        const CycNum lam = rho_eigenvalue(label);
        return CycNum(Rat(1, 3)) * (id + lam.conj() * r1 + lam * r2);
    };
    return {make(CyclicLabel::Trivial), make(CyclicLabel::Omega), make(CyclicLabel::OmegaBar)};
}

bool in_cyclic_space(const Tensor3& t) {
    const Tensor3 r1 = cycle_subscripts(t);
    return (t + r1 + cycle_subscripts(r1)).is_zero();
}

bool in_eigenspace(const Tensor3& t, CyclicLabel label) {
    return cycle_subscripts(t) == rho_eigenvalue(label) * t;
}

bool is_traceless(const Tensor3& t) {
    const auto rows = trace_rows(t.dim());
    for (const auto& row : rows) {
        CycNum s;
        for (std::size_t j = 0; j < row.size(); ++j)
            if (!row[j].is_zero()) s += t.data()[j];
        if (!s.is_zero()) return false;
    }
    return true;
}

std::size_t cyclic_space_dimension(std::size_t n) {
    const Matrix r1 = rho_matrix(n);
    const Matrix sum = Matrix::identity(n * n * n) + r1 + r1 * r1;
    return null_space(matrix_rows(sum), n * n * n).size();
}

std::size_t eigenspace_dimension(std::size_t n, CyclicLabel label) {
    return null_space(eigen_rows(n, label), n * n * n).size();
}

std::size_t traceless_eigenspace_dimension(std::size_t n, CyclicLabel label) {
    auto rows = eigen_rows(n, label);
    for (auto& r : trace_rows(n)) rows.push_back(std::move(r));
    return null_space(std::move(rows), n * n * n).size();
}

std::size_t traceless_omega_dimension(std::size_t n) {
    return traceless_eigenspace_dimension(n, CyclicLabel::Omega);
}

CycNum determinant(const Matrix& a) {
    if (!a.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    std::vector<Vec> m = matrix_rows(a);
    CycNum det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c].is_zero()) ++p;
        if (p == n) return CycNum();
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        const CycNum inv = m[c][c].inv();
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c].is_zero()) continue;
            const CycNum f = m[r][c] * inv;
            for (std::size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
        }
    }
    return det;
}

Tensor3 orthogonal_action(const Matrix& a, const Tensor3& t) {
    const std::size_t n = t.dim();
    if (a.rows() != n || a.cols() != n) throw DimensionMismatch("action matrix does not match tensor size");
    if (a.transpose() * a != Matrix::identity(n)) throw NotOrthogonal("A^T A != I");
    if (determinant(a) != CycNum(1)) throw NotOrthogonal("det A != 1");
    // contract one index at a time
    Tensor3 s1(n), s2(n), s3(n);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t i = 0; i < n; ++i) s1(p, j, k) += a(p, i) * t(i, j, k);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t j = 0; j < n; ++j) s2(p, r, k) += a(r, j) * s1(p, j, k);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t s = 0; s < n; ++s)
                for (std::size_t k = 0; k < n; ++k) s3(p, r, s) += a(s, k) * s2(p, r, k);
    return s3;
}

}  // namespace omegalie
