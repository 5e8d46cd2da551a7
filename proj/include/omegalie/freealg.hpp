#pragma once

// Free ternary algebra on abstract generators, up to degree five.
//
// A degree-five monomial carries one inner triple, written at the left,
// middle or right position of the outer product. Associativity of the first
// kind lets brackets move freely; associativity of the second kind reverses
// the inner triple when it sits in the middle:
//
//     (a.b.c).d.f = a.(d.c.b).f = a.b.(c.d.f)
//
// Canonical form is the flat word read with the bracket on the left.

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "omegalie/cyclotomic.hpp"

namespace omegalie {

enum class AssocKind { First, Second };

std::string to_string(AssocKind kind);
/// Accepts "first"/"second" (also "1"/"2", "I"/"II").
std::optional<AssocKind> parse_assoc_kind(const std::string& text);

enum class Slot { Left, Middle, Right };

std::string to_string(Slot slot);

/// Raised for products whose total degree is not 3 or 5.
class DegreeError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Five generators with the position of the inner triple.
struct BracketedWord {
    std::array<int, 5> gens{};
    Slot slot = Slot::Left;

    friend bool operator==(const BracketedWord&, const BracketedWord&) = default;

    /// e.g. "a1.(a2.a3.a4).a5"
    std::string str() const;
};

/// Canonical monomial: a generator (length 1) or a flat product of length 3 or 5.
class FlatWord {
public:
    FlatWord() = default;
    explicit FlatWord(std::vector<int> gens);

    const std::vector<int>& gens() const { return gens_; }
    std::size_t degree() const { return gens_.size(); }

    friend bool operator==(const FlatWord&, const FlatWord&) = default;
    friend auto operator<=>(const FlatWord& a, const FlatWord& b) { return a.gens_ <=> b.gens_; }

    /// e.g. "a1.a2.a3.a4.a5"
    std::string str() const;

private:
    std::vector<int> gens_;
};

FlatWord flatten(const BracketedWord& w, AssocKind kind);

/// Finite linear combination of flat words; zero coefficients are never stored.
class FreeExpr {
public:
    using Terms = std::map<FlatWord, CycNum>;

    FreeExpr() = default;
    static FreeExpr generator(int index);
    static FreeExpr monomial(FlatWord w, CycNum c = CycNum(1));

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    /// Coefficient of w (zero if absent).
    CycNum coeff(const FlatWord& w) const;

    void add_term(const FlatWord& w, const CycNum& c);

    FreeExpr& operator+=(const FreeExpr& o);
    friend FreeExpr operator+(FreeExpr a, const FreeExpr& b) { return a += b; }
    friend FreeExpr operator*(const CycNum& c, const FreeExpr& e);
    friend bool operator==(const FreeExpr&, const FreeExpr&) = default;

    std::string str() const;

private:
    Terms terms_;
};

FreeExpr expr_add(const FreeExpr& a, const FreeExpr& b);
FreeExpr expr_scale(const CycNum& c, const FreeExpr& e);

/// Flattens every bracketed monomial under `kind` and sums coefficients per flat word.
FreeExpr reduce(const std::vector<std::pair<CycNum, BracketedWord>>& terms, AssocKind kind);

/// The free algebra as a ternary algebra whose elements are FreeExprs.
/// Products are only defined for degree patterns (1,1,1) and a single
/// degree-3 factor beside two generators.
class FreeAlgebra {
public:
    using element_type = FreeExpr;

    explicit FreeAlgebra(AssocKind kind) : kind_(kind) {}

    std::optional<AssocKind> assoc_kind() const { return kind_; }

    FreeExpr product(const FreeExpr& a, const FreeExpr& b, const FreeExpr& c) const;
    FreeExpr add(const FreeExpr& a, const FreeExpr& b) const { return a + b; }
    FreeExpr scale(const CycNum& c, const FreeExpr& a) const { return c * a; }
    FreeExpr zero() const { return {}; }
    bool equal(const FreeExpr& a, const FreeExpr& b) const { return a == b; }

private:
    AssocKind kind_;
};

}  // namespace omegalie
