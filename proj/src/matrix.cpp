#include "omegalie/matrix.hpp"

#include <sstream>

namespace omegalie {

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector lengths differ");
    Vec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec vec_scale(const CycNum& c, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

bool vec_is_zero(const Vec& a) {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

Vec unit_vector(std::size_t n, std::size_t i) {
    Vec e(n);
    e.at(i) = CycNum(1);
    return e;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = CycNum(1);
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

CycNum Matrix::trace() const {
    if (!is_square()) throw DimensionMismatch("trace of a non-square matrix");
    CycNum t;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::is_symmetric() const {
    return is_square() && *this == transpose();
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix shapes differ");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix shapes differ");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

Matrix operator*(const CycNum& c, const Matrix& a) {
    Matrix r(a);
    for (auto& x : r.data_) x = c * x;
    return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const CycNum& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
        }
    return r;
}

Vec operator*(const Matrix& a, const Vec& x) {
    if (a.cols() != x.size()) throw DimensionMismatch("matrix-vector shape mismatch");
    Vec r(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r[i] += a(i, j) * x[j];
    return r;
}

std::string Matrix::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << "[";
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
        os << "]\n";
    }
    return os.str();
}

}  // namespace omegalie
