#include "omegalie/commutator.hpp"

namespace omegalie {

namespace {
constexpr std::array<std::size_t, 3> kABC{0, 1, 2};
constexpr std::array<std::size_t, 3> kBCA{1, 2, 0};
constexpr std::array<std::size_t, 3> kCAB{2, 0, 1};
constexpr std::array<std::size_t, 3> kCBA{2, 1, 0};
constexpr std::array<std::size_t, 3> kBAC{1, 0, 2};
constexpr std::array<std::size_t, 3> kACB{0, 2, 1};
}  // namespace

std::string to_string(BracketForm form) {
    switch (form) {
        case BracketForm::Full: return "full";
        case BracketForm::Conjugate: return "conjugate";
        case BracketForm::Epsilon: return "epsilon";
        case BracketForm::Reduced: return "reduced";
        case BracketForm::ReducedConjugate: return "reduced-conjugate";
    }
    return "?";
}

std::optional<BracketForm> parse_bracket_form(const std::string& text) {
    for (auto f : {BracketForm::Full, BracketForm::Conjugate, BracketForm::Epsilon, BracketForm::Reduced,
                   BracketForm::ReducedConjugate})
        if (to_string(f) == text) return f;
    return std::nullopt;
}

const std::array<PermTerm, 6>& full_bracket_terms() {
    static const std::array<PermTerm, 6> terms{{
        {kABC, CycNum(1)},
        {kBCA, omega()},
        {kCAB, omega_bar()},
        {kCBA, CycNum(1)},
        {kBAC, omega_bar()},
        {kACB, omega()},
    }};
    return terms;
}

const std::array<PermTerm, 6>& conjugate_bracket_terms() {
    static const std::array<PermTerm, 6> terms{{
        {kABC, CycNum(1)},
        {kBCA, omega_bar()},
        {kCAB, omega()},
        {kCBA, CycNum(1)},
        {kBAC, omega()},
        {kACB, omega_bar()},
    }};
    return terms;
}

const std::array<PermTerm, 6>& epsilon_bracket_terms() {
    // even permutations carry +eps^(2k), odd ones -eps^(2k+1)
    static const std::array<PermTerm, 6> terms{{
        {kABC, epsilon_power(0)},
        {kBAC, -epsilon_power(1)},
        {kBCA, epsilon_power(2)},
        {kCBA, -epsilon_power(3)},
        {kCAB, epsilon_power(4)},
        {kACB, -epsilon_power(5)},
    }};
    return terms;
}

}  // namespace omegalie
