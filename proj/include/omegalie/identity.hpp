#pragma once

// The 20-term basic identity
//
//     cyc( [[a,b,c],d,f] + [[a,d,b],f,c] + [[a,f,d],c,b] + [[a,c,f],b,d] ) = 0
//
// indexed by GA(1,5), checked symbolically in the free ternary algebra under
// both kinds of associativity, and evaluated on concrete carriers.

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "omegalie/commutator.hpp"
#include "omegalie/freealg.hpp"
#include "omegalie/permgroup.hpp"
#include "omegalie/report.hpp"

namespace omegalie {

/// [[l0,l1,l2],l3,l4] over generator indices.
struct DoubleBracketTerm {
    std::array<int, 5> letters{};

    friend bool operator==(const DoubleBracketTerm&, const DoubleBracketTerm&) = default;
    friend auto operator<=>(const DoubleBracketTerm&, const DoubleBracketTerm&) = default;

    /// e.g. "[[a1,a2,a3],a4,a5]"
    std::string str() const;
};

/// g applied to (1,2,3,4,5) for each g, as double brackets.
std::vector<DoubleBracketTerm> terms_from_perms(const std::vector<Perm5>& perms);

/// The 20 terms, in coset-row order (row r, shift k at index 5r+k).
std::vector<DoubleBracketTerm> build_basic_identity();
/// cyc[[x,y,z],u,v] + cyc[[x,u,y],v,z]: the first two coset rows.
std::vector<DoubleBracketTerm> build_reduced_identity();

/// One bracketed monomial of an expanded double bracket.
struct ExpandedMonomial {
    std::size_t term = 0;
    BracketedWord word;
    CycNum coeff;
};

/// Deliberate change to one coefficient, for negative controls.
struct CoefficientPerturbation {
    enum class Level { Weight, Inner, Outer };
    std::size_t term = 0;
    Level level = Level::Weight;
    /// Index into full_bracket_terms() for Inner/Outer; ignored for Weight.
    std::size_t index = 0;
    CycNum delta = CycNum(1);
};

/// 36 bracketed monomials per double bracket, in term / outer / inner order.
std::vector<ExpandedMonomial> expand_double_brackets(
    const std::vector<DoubleBracketTerm>& terms,
    const std::optional<CoefficientPerturbation>& perturbation = std::nullopt);

struct VerificationReport {
    AssocKind kind = AssocKind::First;
    std::size_t bracketed_term_count = 0;
    /// Distinct flat words hit before cancellation.
    std::size_t flat_word_count = 0;
    std::size_t min_contributions = 0;
    std::size_t max_contributions = 0;
    std::vector<std::pair<FlatWord, CycNum>> nonzero_words;

    bool verified() const { return nonzero_words.empty(); }
};

VerificationReport verify_terms(const std::vector<DoubleBracketTerm>& terms, AssocKind kind,
                                const std::optional<CoefficientPerturbation>& perturbation = std::nullopt);

VerificationReport verify_basic_identity(AssocKind kind);

/// Where a flat word comes from inside the expanded identity.
struct TraceEntry {
    DoubleBracketTerm source;
    Slot slot = Slot::Left;
    BracketedWord monomial;
    CycNum coeff;
};

std::vector<TraceEntry> trace_word(const FlatWord& word, AssocKind kind);

/// Two-line blocks of three: source double brackets over their monomials.
std::string render_trace_table(const std::vector<TraceEntry>& entries);

/// Sum over terms of outer(inner(a_l0, a_l1, a_l2), a_l3, a_l4), with the
/// letters 1..5 mapped onto args[0..4].
template <TernaryAlgebra A, class Bracket>
element_t<A> evaluate_identity(const A& alg, std::span<const element_t<A>, 5> args,
                               const std::vector<DoubleBracketTerm>& terms, Bracket&& br) {
    element_t<A> acc = alg.zero();
    for (const auto& t : terms) {
        const auto& l = t.letters;
        auto inner = br(alg, args[l[0] - 1], args[l[1] - 1], args[l[2] - 1]);
        acc = alg.add(acc, br(alg, inner, args[l[3] - 1], args[l[4] - 1]));
    }
    return acc;
}

template <TernaryAlgebra A>
element_t<A> evaluate_basic_identity(const A& alg, std::span<const element_t<A>, 5> args) {
    return evaluate_identity(alg, args, build_basic_identity(),
                             [](const A& g, const auto& x, const auto& y, const auto& z) { return bracket(g, x, y, z); });
}

/// Ten-term identity with the reduced bracket, on `trials` sampled 5-tuples.
/// `sample` returns std::optional<element>; an empty optional raises SamplerExhausted.
template <TernaryAlgebra A, class SampleFn>
TrialReport verify_reduced_identity(const A& alg, SampleFn&& sample, std::size_t trials, std::uint64_t seed = 0) {
    const auto terms = build_reduced_identity();
    TrialReport rep;
    rep.seed = seed;
    for (std::size_t t = 0; t < trials; ++t) {
        std::array<element_t<A>, 5> args;
        for (auto& a : args) {
            std::optional<element_t<A>> x = sample();
            if (!x) throw SamplerExhausted();
            a = std::move(*x);
        }
        auto value = evaluate_identity(alg, std::span<const element_t<A>, 5>(args), terms,
                                       [](const A& g, const auto& x, const auto& y, const auto& z) {
                                           return reduced_bracket(g, x, y, z);
                                       });
        ++rep.trials;
        if (!alg.equal(value, alg.zero())) rep.record_failure(t, "nonzero reduced identity at trial " + std::to_string(t));
    }
    return rep;
}

}  // namespace omegalie
