#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "omegalie/cyclotomic.hpp"

namespace omegalie {

class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using Vec = std::vector<CycNum>;

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_scale(const CycNum& c, const Vec& a);
bool vec_is_zero(const Vec& a);
/// Unit vector e_i (0-based) of length n.
Vec unit_vector(std::size_t n, std::size_t i);

/// Dense row-major matrix over Q(w).
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    CycNum& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const CycNum& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<CycNum>& data() const { return data_; }

    Matrix transpose() const;
    CycNum trace() const;
    bool is_zero() const;
    bool is_symmetric() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const CycNum& c, const Matrix& a);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    std::string str() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<CycNum> data_;
};

Vec operator*(const Matrix& a, const Vec& x);

}  // namespace omegalie
