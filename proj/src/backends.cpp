#include "omegalie/backends.hpp"

#include <algorithm>
#include <sstream>

namespace omegalie {

// ---------------------------------------------------------------- cubic

bool CubicMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const CycNum& x) { return x.is_zero(); });
}

CubicMatrix& CubicMatrix::operator+=(const CubicMatrix& o) {
    if (n_ != o.n_) throw DimensionMismatch("cubic matrix orders differ");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

CubicMatrix operator*(const CycNum& c, const CubicMatrix& a) {
    CubicMatrix r(a);
    for (auto& x : r.data_) x = c * x;
    return r;
}

std::string CubicMatrix::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            for (std::size_t k = 0; k < n_; ++k)
                if (!(*this)(i, j, k).is_zero())
                    os << "a" << i + 1 << j + 1 << k + 1 << " = " << (*this)(i, j, k) << "\n";
    return os.str();
}

std::optional<CubicVariant> cubic_variant_from_int(int v) {
    if (v < 1 || v > 4) return std::nullopt;
    return static_cast<CubicVariant>(v);
}

std::string cubic_variant_formula(CubicVariant v) {
    switch (v) {
        case CubicVariant::V1: return "A_ilm B_nlm C_njk";
        case CubicVariant::V2: return "A_ilm B_nml C_njk";
        case CubicVariant::V3: return "A_ijl B_nml C_mnk";
        case CubicVariant::V4: return "A_ijl B_mnl C_mnk";
    }
    return "?";
}

CubicMatrix cubic_product(const CubicMatrix& a, const CubicMatrix& b, const CubicMatrix& c, CubicVariant v) {
    const std::size_t n = a.order();
    if (b.order() != n || c.order() != n) throw DimensionMismatch("cubic matrix orders differ");
    CubicMatrix r(n);
    Matrix k(n, n);

    if (v == CubicVariant::V1 || v == CubicVariant::V2) {
        // K_in = sum_lm A_ilm B_nlm (V1) or A_ilm B_nml (V2); result_ijk = K_in C_njk
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t l = 0; l < n; ++l)
                    for (std::size_t m = 0; m < n; ++m) {
                        const CycNum& x = a(i, l, m);
                        if (x.is_zero()) continue;
                        k(i, p) += x * (v == CubicVariant::V1 ? b(p, l, m) : b(p, m, l));
                    }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t p = 0; p < n; ++p) {
                if (k(i, p).is_zero()) continue;
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t q = 0; q < n; ++q) r(i, j, q) += k(i, p) * c(p, j, q);
            }
        return r;
    }

    // K_lk = sum_mn B_nml C_mnk (V3) or B_mnl C_mnk (V4); result_ijk = A_ijl K_lk
    for (std::size_t l = 0; l < n; ++l)
        for (std::size_t q = 0; q < n; ++q)
            for (std::size_t m = 0; m < n; ++m)
                for (std::size_t p = 0; p < n; ++p) {
                    const CycNum& x = v == CubicVariant::V3 ? b(p, m, l) : b(m, p, l);
                    if (x.is_zero()) continue;
                    k(l, q) += x * c(m, p, q);
                }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l) {
                const CycNum& x = a(i, j, l);
                if (x.is_zero()) continue;
                for (std::size_t q = 0; q < n; ++q) r(i, j, q) += x * k(l, q);
            }
    return r;
}

CubicTraces cubic_traces(const CubicMatrix& a) {
    const std::size_t n = a.order();
    CubicTraces t{Vec(n), Vec(n), Vec(n)};
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) {
            t.first_pair[k] += a(i, i, k);
            t.outer_pair[k] += a(i, k, i);
            t.last_pair[k] += a(k, i, i);
        }
    return t;
}

bool is_traceless(const CubicMatrix& a) {
    const auto t = cubic_traces(a);
    return vec_is_zero(t.first_pair) && vec_is_zero(t.outer_pair) && vec_is_zero(t.last_pair);
}

std::pair<CubicMatrix, CubicMatrix> traceless_cubic_basis() {
    CubicMatrix e1(2);
    CubicMatrix e2(2);
    e1(0, 0, 0) = CycNum(1);
    e1(1, 1, 0) = e1(1, 0, 1) = e1(0, 1, 1) = CycNum(-1);
    e2(1, 1, 1) = CycNum(1);
    e2(0, 0, 1) = e2(0, 1, 0) = e2(1, 0, 0) = CycNum(-1);
    return {e1, e2};
}

CubicMatrix CubicAlg::product(const CubicMatrix& a, const CubicMatrix& b, const CubicMatrix& c) const {
    return cubic_product(a, b, c, variant_);
}

std::vector<CubicMatrix> CubicAlg::canonical_basis() const {
    std::vector<CubicMatrix> basis;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            for (std::size_t k = 0; k < n_; ++k) {
                CubicMatrix e(n_);
                e(i, j, k) = CycNum(1);
                basis.push_back(std::move(e));
            }
    return basis;
}

// ---------------------------------------------------------------- vectors

VecAlg::VecAlg(Matrix form) : form_(std::move(form)) {
    if (!form_.is_square()) throw DimensionMismatch("bilinear form must be square");
    if (!form_.is_symmetric()) throw DimensionMismatch("bilinear form must be symmetric");
}

void VecAlg::check(const Vec& x) const {
    if (x.size() != dim())
        throw DimensionMismatch("vector of length " + std::to_string(x.size()) + " in dimension " +
                                std::to_string(dim()));
}

CycNum VecAlg::bilinear(const Vec& x, const Vec& y) const {
    check(x);
    check(y);
    CycNum s;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim(); ++j)
            if (!form_(i, j).is_zero()) s += x[i] * form_(i, j) * y[j];
    }
    return s;
}

Vec VecAlg::product(const Vec& x, const Vec& y, const Vec& z) const {
    check(z);
    return vec_scale(bilinear(x, y), z);
}

std::vector<Vec> VecAlg::canonical_basis() const {
    std::vector<Vec> basis;
    for (std::size_t i = 0; i < dim(); ++i) basis.push_back(unit_vector(dim(), i));
    return basis;
}

Vec vec_product(const VecAlg& alg, const Vec& x, const Vec& y, const Vec& z) {
    return alg.product(x, y, z);
}

// ---------------------------------------------------------------- rectangular

RectAlg::RectAlg(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
    if (rows == 0 || cols == 0) throw DimensionMismatch("matrix dimensions must be positive");
}

Matrix RectAlg::product(const Matrix& a, const Matrix& b, const Matrix& c) const {
    if (a.rows() != rows_ || a.cols() != cols_) throw DimensionMismatch("matrix shape does not match algebra");
    return rect_product(a, b, c);
}

std::vector<Matrix> RectAlg::canonical_basis() const {
    std::vector<Matrix> basis;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            Matrix e(rows_, cols_);
            e(i, j) = CycNum(1);
            basis.push_back(std::move(e));
        }
    return basis;
}

Matrix rect_product(const Matrix& a, const Matrix& b, const Matrix& c) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != c.rows() || a.cols() != c.cols())
        throw DimensionMismatch("rectangular product needs three equally shaped matrices");
    return (a * b.transpose()) * c;
}

// ---------------------------------------------------------------- trace

TraceAlg::TraceAlg(std::size_t n) : n_(n) {
    if (n == 0) throw DimensionMismatch("matrix order must be positive");
}

void TraceAlg::check(const Matrix& m) const {
    if (m.rows() != n_ || m.cols() != n_) throw DimensionMismatch("matrix order does not match algebra");
}

CycNum TraceAlg::bilinear(const Matrix& p, const Matrix& q) const {
    check(p);
    check(q);
    CycNum s;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) s += p(i, j) * q(j, i);
    return s;
}

Matrix TraceAlg::product(const Matrix& p, const Matrix& q, const Matrix& r) const {
    check(r);
    return bilinear(p, q) * r;
}

std::vector<Matrix> TraceAlg::canonical_basis() const { return RectAlg(n_, n_).canonical_basis(); }

VecAlg TraceAlg::as_vec_alg() const {
    const std::size_t d = n_ * n_;
    Matrix form(d, d);
    // Tr(PQ) = sum_ij P_ij Q_ji
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) form(i * n_ + j, j * n_ + i) = CycNum(1);
    return VecAlg(std::move(form));
}

Matrix TraceAlg::from_coords(const Vec& v) const {
    if (v.size() != n_ * n_) throw DimensionMismatch("coordinate vector has wrong length");
    Matrix m(n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) m(i, j) = v[i * n_ + j];
    return m;
}

Matrix trace_product(const Matrix& p, const Matrix& q, const Matrix& r) {
    if (!p.is_square() || p.rows() != q.rows() || p.cols() != q.cols() || p.rows() != r.rows() ||
        p.cols() != r.cols())
        throw DimensionMismatch("trace product needs three square matrices of the same order");
    return TraceAlg(p.rows()).product(p, q, r);
}

Matrix awata_minich_bracket(const Matrix& p, const Matrix& q, const Matrix& r) {
    if (!p.is_square() || !(p.rows() == q.rows() && q.rows() == r.rows() && q.is_square() && r.is_square()))
        throw DimensionMismatch("3-Lie bracket needs three square matrices of the same order");
    auto comm = [](const Matrix& x, const Matrix& y) { return x * y - y * x; };
    return p.trace() * comm(q, r) + q.trace() * comm(r, p) + r.trace() * comm(p, q);
}

// ---------------------------------------------------------------- relations

bool RelationsReport::all_pass() const {
    return std::all_of(relations.begin(), relations.end(), [](const RelationResult& r) { return r.pass; });
}

std::optional<CycNum> proportionality(const Vec& value, const Vec& target) {
    if (value.size() != target.size()) throw DimensionMismatch("proportionality of different shapes");
    std::optional<CycNum> c;
    for (std::size_t i = 0; i < value.size(); ++i) {
        if (target[i].is_zero()) {
            if (!value[i].is_zero()) return std::nullopt;
            continue;
        }
        CycNum r = value[i] / target[i];
        if (c && !(*c == r)) return std::nullopt;
        c = r;
    }
    return c ? c : std::optional<CycNum>(CycNum());
}

namespace {

RelationResult relation(std::string name, const Vec& lhs, const Vec& target, const CycNum& expected) {
    RelationResult r;
    r.relation = std::move(name);
    r.expected = expected;
    r.scalar = proportionality(lhs, target);
    r.pass = r.scalar && *r.scalar == expected;
    return r;
}

}  // namespace

RelationsReport bracket_traceless_relations(CubicVariant variant) {
    const CubicAlg alg(2, variant);
    const auto [e1, e2] = traceless_cubic_basis();
    RelationsReport rep;
    rep.relations.push_back(relation("[E1,E2,E1] = -8 E2", bracket(alg, e1, e2, e1).data(), e2.data(), CycNum(-8)));
    rep.relations.push_back(relation("[E2,E1,E2] = -8 E1", bracket(alg, e2, e1, e2).data(), e1.data(), CycNum(-8)));
    rep.relations.push_back(relation("[E1,E1,E1] = 0", bracket(alg, e1, e1, e1).data(), e1.data(), CycNum(0)));
    return rep;
}

RelationsReport vector_l2_relations() {
    const VecAlg alg = VecAlg::standard(2);
    const Vec e1 = unit_vector(2, 0);
    const Vec e2 = unit_vector(2, 1);
    RelationsReport rep;
    rep.relations.push_back(relation("[e1,e2,e1] = e2", reduced_bracket(alg, e1, e2, e1), e2, CycNum(1)));
    rep.relations.push_back(relation("[e2,e1,e2] = e1", reduced_bracket(alg, e2, e1, e2), e1, CycNum(1)));
    return rep;
}

// ---------------------------------------------------------------- sampling

Vec random_vec(Sampler& s, std::size_t n) {
    Vec v(n);
    for (auto& x : v) x = s.cyc();
    return v;
}

Matrix random_matrix(Sampler& s, std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = s.cyc();
    return m;
}

Matrix random_symmetric(Sampler& s, std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = CycNum(s.rational());
    return m;
}

CubicMatrix random_cubic(Sampler& s, std::size_t order) {
    CubicMatrix c(order);
    for (std::size_t i = 0; i < order; ++i)
        for (std::size_t j = 0; j < order; ++j)
            for (std::size_t k = 0; k < order; ++k) c(i, j, k) = s.cyc();
    return c;
}

}  // namespace omegalie
