#pragma once

// Concrete ternary algebras, all associative of the second kind:
//
//   VecAlg    x.y.z = B(x,y) z            (B symmetric)
//   RectAlg   A.B.C = A B^T C             (m x n matrices)
//   TraceAlg  P.Q.R = Tr(PQ) R            (square matrices)
//   CubicAlg  the four contractions of cubic (three-index) matrices
//
// plus the traceless cubic subalgebra of order 2 and the trace-based
// totally skew-symmetric 3-Lie bracket used as a contrast.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "omegalie/commutator.hpp"
#include "omegalie/matrix.hpp"
#include "omegalie/random.hpp"
#include "omegalie/report.hpp"

namespace omegalie {

/// Order-N three-index array A_ijk, indices 0..N-1.
class CubicMatrix {
public:
    CubicMatrix() = default;
    explicit CubicMatrix(std::size_t order) : n_(order), data_(order * order * order) {}

    std::size_t order() const { return n_; }
    CycNum& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * n_ + j) * n_ + k]; }
    const CycNum& operator()(std::size_t i, std::size_t j, std::size_t k) const { return data_[(i * n_ + j) * n_ + k]; }
    const std::vector<CycNum>& data() const { return data_; }

    bool is_zero() const;

    CubicMatrix& operator+=(const CubicMatrix& o);
    friend CubicMatrix operator+(CubicMatrix a, const CubicMatrix& b) { return a += b; }
    friend CubicMatrix operator*(const CycNum& c, const CubicMatrix& a);
    friend bool operator==(const CubicMatrix&, const CubicMatrix&) = default;

    std::string str() const;

private:
    std::size_t n_ = 0;
    std::vector<CycNum> data_;
};

enum class CubicVariant { V1 = 1, V2 = 2, V3 = 3, V4 = 4 };

std::optional<CubicVariant> cubic_variant_from_int(int v);
/// Index pattern, e.g. "A_ijl B_nml C_mnk".
std::string cubic_variant_formula(CubicVariant v);

/// V1: A_ilm B_nlm C_njk   V2: A_ilm B_nml C_njk
/// V3: A_ijl B_nml C_mnk   V4: A_ijl B_mnl C_mnk
CubicMatrix cubic_product(const CubicMatrix& a, const CubicMatrix& b, const CubicMatrix& c, CubicVariant v);

/// The three single-pair traces a_iik, a_iki, a_kii for each k.
struct CubicTraces {
    Vec first_pair;
    Vec outer_pair;
    Vec last_pair;
};
CubicTraces cubic_traces(const CubicMatrix& a);
bool is_traceless(const CubicMatrix& a);

/// E1: a111 = 1, a221 = a212 = a122 = -1; E2: a222 = 1, a112 = a121 = a211 = -1.
std::pair<CubicMatrix, CubicMatrix> traceless_cubic_basis();

class VecAlg {
public:
    using element_type = Vec;

    /// Throws DimensionMismatch unless form is square and exactly symmetric.
    explicit VecAlg(Matrix form);
    static VecAlg standard(std::size_t n) { return VecAlg(Matrix::identity(n)); }

    std::size_t dim() const { return form_.rows(); }
    const Matrix& form() const { return form_; }
    std::optional<AssocKind> assoc_kind() const { return AssocKind::Second; }

    CycNum bilinear(const Vec& x, const Vec& y) const;
    Vec product(const Vec& x, const Vec& y, const Vec& z) const;
    Vec add(const Vec& a, const Vec& b) const { return vec_add(a, b); }
    Vec scale(const CycNum& c, const Vec& a) const { return vec_scale(c, a); }
    Vec zero() const { return Vec(dim()); }
    bool equal(const Vec& a, const Vec& b) const { return a == b; }
    Vec coords(const Vec& x) const { return x; }
    std::vector<Vec> canonical_basis() const;

private:
    void check(const Vec& x) const;
    Matrix form_;
};

Vec vec_product(const VecAlg& alg, const Vec& x, const Vec& y, const Vec& z);

class RectAlg {
public:
    using element_type = Matrix;

    RectAlg(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::optional<AssocKind> assoc_kind() const { return AssocKind::Second; }

    Matrix product(const Matrix& a, const Matrix& b, const Matrix& c) const;
    Matrix add(const Matrix& a, const Matrix& b) const { return a + b; }
    Matrix scale(const CycNum& c, const Matrix& a) const { return c * a; }
    Matrix zero() const { return Matrix(rows_, cols_); }
    bool equal(const Matrix& a, const Matrix& b) const { return a == b; }
    Vec coords(const Matrix& a) const { return a.data(); }
    std::vector<Matrix> canonical_basis() const;

private:
    std::size_t rows_;
    std::size_t cols_;
};

/// A B^T C for equally shaped A, B, C.
Matrix rect_product(const Matrix& a, const Matrix& b, const Matrix& c);

class TraceAlg {
public:
    using element_type = Matrix;

    explicit TraceAlg(std::size_t n);

    std::size_t order() const { return n_; }
    std::optional<AssocKind> assoc_kind() const { return AssocKind::Second; }

    /// Tr(PQ)
    CycNum bilinear(const Matrix& p, const Matrix& q) const;
    Matrix product(const Matrix& p, const Matrix& q, const Matrix& r) const;
    Matrix add(const Matrix& a, const Matrix& b) const { return a + b; }
    Matrix scale(const CycNum& c, const Matrix& a) const { return c * a; }
    Matrix zero() const { return Matrix(n_, n_); }
    bool equal(const Matrix& a, const Matrix& b) const { return a == b; }
    Vec coords(const Matrix& a) const { return a.data(); }
    std::vector<Matrix> canonical_basis() const;

    /// The same algebra as a VecAlg on row-major n^2 coordinates with the trace pairing.
    VecAlg as_vec_alg() const;
    Matrix from_coords(const Vec& v) const;

private:
    void check(const Matrix& m) const;
    std::size_t n_;
};

/// Tr(PQ) R
Matrix trace_product(const Matrix& p, const Matrix& q, const Matrix& r);

class CubicAlg {
public:
    using element_type = CubicMatrix;

    CubicAlg(std::size_t order, CubicVariant variant) : n_(order), variant_(variant) {}

    std::size_t order() const { return n_; }
    CubicVariant variant() const { return variant_; }
    std::optional<AssocKind> assoc_kind() const { return AssocKind::Second; }

    CubicMatrix product(const CubicMatrix& a, const CubicMatrix& b, const CubicMatrix& c) const;
    CubicMatrix add(const CubicMatrix& a, const CubicMatrix& b) const { return a + b; }
    CubicMatrix scale(const CycNum& c, const CubicMatrix& a) const { return c * a; }
    CubicMatrix zero() const { return CubicMatrix(n_); }
    bool equal(const CubicMatrix& a, const CubicMatrix& b) const { return a == b; }
    Vec coords(const CubicMatrix& a) const { return a.data(); }
    std::vector<CubicMatrix> canonical_basis() const;

private:
    std::size_t n_;
    CubicVariant variant_;
};

/// Tr(P)[Q,R] + Tr(Q)[R,P] + Tr(R)[P,Q] with binary commutators.
Matrix awata_minich_bracket(const Matrix& p, const Matrix& q, const Matrix& r);

struct RelationResult {
    std::string relation;
    bool pass = false;
    /// c with lhs = c * target, when lhs is a multiple of the target.
    std::optional<CycNum> scalar;
    CycNum expected;
};

struct RelationsReport {
    std::vector<RelationResult> relations;
    bool all_pass() const;
};

/// [E1,E2,E1] = -8 E2 and [E2,E1,E2] = -8 E1 under the full bracket (rescaling of
/// [F1,F2,F1] = F2 with F = c E, c^2 = -1/8), plus [E1,E1,E1] = 0.
RelationsReport bracket_traceless_relations(CubicVariant variant = CubicVariant::V3);

/// [e1,e2,e1] = e2 and [e2,e1,e2] = e1 for the reduced bracket on VecAlg::standard(2).
RelationsReport vector_l2_relations();

/// If value = c * target for some c, returns c (zero when both vanish).
std::optional<CycNum> proportionality(const Vec& value, const Vec& target);

// Random exact elements (small rationals in both Q-coordinates unless noted).
Vec random_vec(Sampler& s, std::size_t n);
Matrix random_matrix(Sampler& s, std::size_t rows, std::size_t cols);
/// Symmetric with rational entries.
Matrix random_symmetric(Sampler& s, std::size_t n);
CubicMatrix random_cubic(Sampler& s, std::size_t order);

/// Checks the three bracketings of a five-fold product agree for `kind`:
///   first:  (abc)df = a(bcd)f = ab(cdf)
///   second: (abc)df = a(dcb)f = ab(cdf)
template <TernaryAlgebra A>
bool associative_on(const A& alg, AssocKind kind, const element_t<A>& a, const element_t<A>& b,
                    const element_t<A>& c, const element_t<A>& d, const element_t<A>& f) {
    const auto left = alg.product(alg.product(a, b, c), d, f);
    const auto right = alg.product(a, b, alg.product(c, d, f));
    const auto middle = kind == AssocKind::First ? alg.product(a, alg.product(b, c, d), f)
                                                 : alg.product(a, alg.product(d, c, b), f);
    return alg.equal(left, middle) && alg.equal(left, right);
}

/// Runs `trials` associativity checks on tuples drawn from `sample()`.
template <TernaryAlgebra A, class SampleFn>
TrialReport check_associativity(const A& alg, AssocKind kind, SampleFn&& sample, std::size_t trials,
                                std::uint64_t seed = 0) {
    TrialReport rep;
    rep.seed = seed;
    for (std::size_t t = 0; t < trials; ++t) {
        const auto a = sample(), b = sample(), c = sample(), d = sample(), f = sample();
        ++rep.trials;
        if (!associative_on(alg, kind, a, b, c, d, f))
            rep.record_failure(t, to_string(kind) + "-kind associativity fails at trial " + std::to_string(t));
    }
    return rep;
}

}  // namespace omegalie
