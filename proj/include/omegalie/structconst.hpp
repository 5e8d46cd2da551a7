#pragma once

// Structure constants [e_i,e_k,e_l] = C^m_ikl e_m of a ternary w-Lie algebra.
//
// Subscript cycling (rho T)_ijk = T_jki. The w-symmetry C^m_ikl = w C^m_kli
// makes every slice C^m an eigenvector of rho with eigenvalue wbar. Subspaces
// keep their usual labels: T3_w = {T : T_ijk = w T_jki} is the rho-eigenspace
// for wbar, and T3_wbar the one for w. T3 = {T : T + rho T + rho^2 T = 0}
// is their direct sum.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "omegalie/commutator.hpp"
#include "omegalie/linalg.hpp"
#include "omegalie/matrix.hpp"
#include "omegalie/random.hpp"

namespace omegalie {

/// C^m_ikl, stored once; the conjugate constants are derived.
class Tensor13 {
public:
    Tensor13() = default;
    explicit Tensor13(std::size_t n) : n_(n), data_(n * n * n * n) {}

    std::size_t dim() const { return n_; }
    CycNum& operator()(std::size_t m, std::size_t i, std::size_t k, std::size_t l) {
        return data_[((m * n_ + i) * n_ + k) * n_ + l];
    }
    const CycNum& operator()(std::size_t m, std::size_t i, std::size_t k, std::size_t l) const {
        return data_[((m * n_ + i) * n_ + k) * n_ + l];
    }
    /// Ctilde^m_ikl = C^m_lki.
    const CycNum& conj_constant(std::size_t m, std::size_t i, std::size_t k, std::size_t l) const {
        return (*this)(m, l, k, i);
    }
    /// Entries in lexicographic (m,i,k,l) order.
    const std::vector<CycNum>& data() const { return data_; }
    std::vector<CycNum>& data() { return data_; }

    friend bool operator==(const Tensor13&, const Tensor13&) = default;

private:
    std::size_t n_ = 0;
    std::vector<CycNum> data_;
};

class Tensor3 {
public:
    Tensor3() = default;
    explicit Tensor3(std::size_t n) : n_(n), data_(n * n * n) {}
    Tensor3(std::size_t n, Vec entries);

    std::size_t dim() const { return n_; }
    CycNum& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * n_ + j) * n_ + k]; }
    const CycNum& operator()(std::size_t i, std::size_t j, std::size_t k) const { return data_[(i * n_ + j) * n_ + k]; }
    const Vec& data() const { return data_; }

    bool is_zero() const { return vec_is_zero(data_); }
    friend bool operator==(const Tensor3&, const Tensor3&) = default;
    friend Tensor3 operator+(const Tensor3& a, const Tensor3& b) { return Tensor3(a.n_, vec_add(a.data_, b.data_)); }
    friend Tensor3 operator*(const CycNum& c, const Tensor3& a) { return Tensor3(a.n_, vec_scale(c, a.data_)); }

private:
    std::size_t n_ = 0;
    Vec data_;
};

/// Fixed-m slice T_ikl = C^m_ikl.
Tensor3 slice(const Tensor13& c, std::size_t m);
/// Fixed-m slice of the conjugate constants.
Tensor3 conj_slice(const Tensor13& c, std::size_t m);

/// Expands every [e_i,e_k,e_l] (in the chosen form) in the basis. Throws
/// SingularBasis for a dependent basis, OutOfSpan when a value leaves the span.
template <TernaryAlgebra A>
Tensor13 extract(const A& alg, const std::vector<element_t<A>>& basis, BracketForm form) {
    const std::size_t n = basis.size();
    std::vector<Vec> columns;
    columns.reserve(n);
    for (const auto& e : basis) columns.push_back(alg.coords(e));

    std::vector<Vec> targets;
    targets.reserve(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = 0; l < n; ++l)
                targets.push_back(alg.coords(evaluate_bracket(alg, form, basis[i], basis[k], basis[l])));

    const auto coords = solve_in_basis(columns, targets);
    Tensor13 c(n);
    std::size_t t = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = 0; l < n; ++l, ++t)
                for (std::size_t m = 0; m < n; ++m) c(m, i, k, l) = coords[t][m];
    return c;
}

/// delta_ki delta^m_j + w delta_ij delta^m_k + wbar delta_jk delta^m_i
Tensor13 vector_algebra_constants(std::size_t n);

struct SymmetryViolation {
    std::size_t m, i, k, l;
    /// Which equality failed, e.g. "C_ikl = w C_kli".
    std::string chain;
};

struct OmegaSymmetryReport {
    std::vector<SymmetryViolation> violations;
    bool pass() const { return violations.empty(); }
};

/// C_ikl = w C_kli = wbar C_lik and Ctilde_ikl = wbar Ctilde_kli = w Ctilde_lik.
OmegaSymmetryReport check_omega_symmetry(const Tensor13& c);

struct FundamentalWitness {
    std::array<std::size_t, 5> lower;  // i, k, l, r, s
    std::size_t upper;                 // p
    CycNum value;
};

struct FundamentalReport {
    std::size_t equations = 0;
    std::size_t violations = 0;
    std::optional<FundamentalWitness> witness;
    bool pass() const { return violations == 0; }
};

/// cyc( C^m_ikl C^p_mrs + C^m_irk C^p_msl + C^m_isr C^p_mlk + C^m_ils C^p_mkr ) = 0
/// for all i,k,l,r,s,p, cycling (i,k,l,r,s).
FundamentalReport check_fundamental(const Tensor13& c);

/// Random tensor with C_ikl = w C_kli, entries small exact values.
Tensor13 random_omega_symmetric(Sampler& s, std::size_t n);

// ---------------------------------------------------------------- cyclic decomposition

enum class CyclicLabel { Trivial, Omega, OmegaBar };

std::string to_string(CyclicLabel label);
/// Eigenvalue of rho on the labelled subspace: 1, wbar, w.
CycNum rho_eigenvalue(CyclicLabel label);

/// (rho T)_ijk = T_jki
Tensor3 cycle_subscripts(const Tensor3& t);

/// Projector onto a labelled subspace: (1/3)(Id + conj(l) rho + l rho^2), l = rho_eigenvalue(label).
Tensor3 project(const Tensor3& t, CyclicLabel label);

struct CyclicProjectors {
    Matrix trivial;
    Matrix omega;
    Matrix omega_bar;
};

/// The three projectors as n^3 x n^3 matrices on row-major (i,j,k) coordinates.
CyclicProjectors cyclic_projectors(std::size_t n);

bool in_cyclic_space(const Tensor3& t);
bool in_eigenspace(const Tensor3& t, CyclicLabel label);
bool is_traceless(const Tensor3& t);

/// dim T3 as an exact null-space rank.
std::size_t cyclic_space_dimension(std::size_t n);
std::size_t eigenspace_dimension(std::size_t n, CyclicLabel label);
std::size_t traceless_eigenspace_dimension(std::size_t n, CyclicLabel label);
/// dim of traceless tensors in T3_w.
std::size_t traceless_omega_dimension(std::size_t n);

class NotOrthogonal : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// T'_prs = A_pi A_rj A_sk T_ijk; A must satisfy A^T A = I and det A = 1 exactly.
Tensor3 orthogonal_action(const Matrix& a, const Tensor3& t);

CycNum determinant(const Matrix& a);

}  // namespace omegalie
