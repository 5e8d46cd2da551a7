#pragma once

// The ternary w-commutator
//
//     [a,b,c] = abc + w bca + wbar cab + cba + wbar bac + w acb
//
// together with its conjugate, the eps-form and the three-term reduced form
// for products that commute in their first two arguments. Everything here is
// generic over any carrier modelling TernaryAlgebra.

#include <array>
#include <concepts>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

#include "omegalie/cyclotomic.hpp"
#include "omegalie/freealg.hpp"

namespace omegalie {

template <class A>
concept TernaryAlgebra = requires(const A& alg, const typename A::element_type& x, const CycNum& c) {
    typename A::element_type;
    { alg.product(x, x, x) } -> std::same_as<typename A::element_type>;
    { alg.add(x, x) } -> std::same_as<typename A::element_type>;
    { alg.scale(c, x) } -> std::same_as<typename A::element_type>;
    { alg.zero() } -> std::same_as<typename A::element_type>;
    { alg.equal(x, x) } -> std::same_as<bool>;
    { alg.assoc_kind() } -> std::same_as<std::optional<AssocKind>>;
};

/// Carriers whose product is x.y.z = B(x,y) z for a symmetric bilinear form B.
template <class A>
concept BilinearFormAlgebra = TernaryAlgebra<A> && requires(const A& alg, const typename A::element_type& x) {
    { alg.bilinear(x, x) } -> std::same_as<CycNum>;
};

template <TernaryAlgebra A>
using element_t = typename A::element_type;

enum class BracketForm { Full, Conjugate, Epsilon, Reduced, ReducedConjugate };

std::string to_string(BracketForm form);
std::optional<BracketForm> parse_bracket_form(const std::string& text);

/// One permutation product inside a bracket: args[perm[0]].args[perm[1]].args[perm[2]].
struct PermTerm {
    std::array<std::size_t, 3> perm;
    CycNum coeff;
};

/// The six terms of [a,b,c], in the order abc, bca, cab, cba, bac, acb.
const std::array<PermTerm, 6>& full_bracket_terms();
/// The six terms of [a,b,c]^*.
const std::array<PermTerm, 6>& conjugate_bracket_terms();
/// abc - eps bac + eps^2 bca - eps^3 cba + eps^4 cab - eps^5 acb, built from eps powers.
const std::array<PermTerm, 6>& epsilon_bracket_terms();

class CommutativityViolation : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

template <TernaryAlgebra A, class Terms>
element_t<A> linear_combination(const A& alg, const Terms& terms, const element_t<A>& a, const element_t<A>& b,
                                const element_t<A>& c) {
    const std::array<const element_t<A>*, 3> args{&a, &b, &c};
    element_t<A> acc = alg.zero();
    for (const PermTerm& t : terms) {
        if (t.coeff.is_zero()) continue;
        acc = alg.add(acc, alg.scale(t.coeff, alg.product(*args[t.perm[0]], *args[t.perm[1]], *args[t.perm[2]])));
    }
    return acc;
}

template <TernaryAlgebra A>
element_t<A> bracket(const A& alg, const element_t<A>& a, const element_t<A>& b, const element_t<A>& c) {
    return linear_combination(alg, full_bracket_terms(), a, b, c);
}

template <TernaryAlgebra A>
element_t<A> bracket_conj(const A& alg, const element_t<A>& a, const element_t<A>& b, const element_t<A>& c) {
    return linear_combination(alg, conjugate_bracket_terms(), a, b, c);
}

template <TernaryAlgebra A>
element_t<A> bracket_epsilon(const A& alg, const element_t<A>& a, const element_t<A>& b, const element_t<A>& c) {
    return linear_combination(alg, epsilon_bracket_terms(), a, b, c);
}

/// z.x.y + w x.y.z + wbar y.z.x, evaluated through the product alone.
/// On a first-two-commutative algebra this equals -[x,y,z].
template <TernaryAlgebra A>
element_t<A> reduced_bracket_generic(const A& alg, const element_t<A>& x, const element_t<A>& y,
                                     const element_t<A>& z) {
    element_t<A> r = alg.product(z, x, y);
    r = alg.add(r, alg.scale(omega(), alg.product(x, y, z)));
    return alg.add(r, alg.scale(omega_bar(), alg.product(y, z, x)));
}

template <TernaryAlgebra A>
element_t<A> reduced_conj_generic(const A& alg, const element_t<A>& x, const element_t<A>& y,
                                  const element_t<A>& z) {
    element_t<A> r = alg.product(z, x, y);
    r = alg.add(r, alg.scale(omega_bar(), alg.product(x, y, z)));
    return alg.add(r, alg.scale(omega(), alg.product(y, z, x)));
}

/// B(z,x) y + w B(x,y) z + wbar B(y,z) x.
template <BilinearFormAlgebra A>
element_t<A> reduced_bracket_form(const A& alg, const element_t<A>& x, const element_t<A>& y, const element_t<A>& z) {
    element_t<A> r = alg.scale(alg.bilinear(z, x), y);
    r = alg.add(r, alg.scale(omega() * alg.bilinear(x, y), z));
    return alg.add(r, alg.scale(omega_bar() * alg.bilinear(y, z), x));
}

template <BilinearFormAlgebra A>
element_t<A> reduced_conj_form(const A& alg, const element_t<A>& x, const element_t<A>& y, const element_t<A>& z) {
    element_t<A> r = alg.scale(alg.bilinear(z, x), y);
    r = alg.add(r, alg.scale(omega_bar() * alg.bilinear(x, y), z));
    return alg.add(r, alg.scale(omega() * alg.bilinear(y, z), x));
}

/// Reduced bracket, through the bilinear form when the carrier has one.
/// Caller asserts the product commutes in its first two arguments.
template <TernaryAlgebra A>
element_t<A> reduced_bracket(const A& alg, const element_t<A>& x, const element_t<A>& y, const element_t<A>& z) {
    if constexpr (BilinearFormAlgebra<A>)
        return reduced_bracket_form(alg, x, y, z);
    else
        return reduced_bracket_generic(alg, x, y, z);
}

template <TernaryAlgebra A>
element_t<A> reduced_bracket_conj(const A& alg, const element_t<A>& x, const element_t<A>& y,
                                  const element_t<A>& z) {
    if constexpr (BilinearFormAlgebra<A>)
        return reduced_conj_form(alg, x, y, z);
    else
        return reduced_conj_generic(alg, x, y, z);
}

/// True iff p.q.r = q.p.r for every ordered pair the three-term reduction uses.
template <TernaryAlgebra A>
bool commutes_first_two(const A& alg, const element_t<A>& x, const element_t<A>& y, const element_t<A>& z) {
    return alg.equal(alg.product(x, y, z), alg.product(y, x, z)) &&
           alg.equal(alg.product(y, z, x), alg.product(z, y, x)) &&
           alg.equal(alg.product(z, x, y), alg.product(x, z, y));
}

/// Reduced bracket that first verifies first-two commutativity on its inputs.
template <TernaryAlgebra A>
element_t<A> reduced_bracket_checked(const A& alg, const element_t<A>& x, const element_t<A>& y,
                                     const element_t<A>& z) {
    if (!commutes_first_two(alg, x, y, z))
        throw CommutativityViolation("product does not commute in its first two arguments on these inputs");
    return reduced_bracket(alg, x, y, z);
}

template <TernaryAlgebra A>
element_t<A> evaluate_bracket(const A& alg, BracketForm form, const element_t<A>& a, const element_t<A>& b,
                              const element_t<A>& c) {
    switch (form) {
        case BracketForm::Full: return bracket(alg, a, b, c);
        case BracketForm::Conjugate: return bracket_conj(alg, a, b, c);
        case BracketForm::Epsilon: return bracket_epsilon(alg, a, b, c);
        case BracketForm::Reduced: return reduced_bracket(alg, a, b, c);
        case BracketForm::ReducedConjugate: return reduced_bracket_conj(alg, a, b, c);
    }
    return alg.zero();
}

}  // namespace omegalie
