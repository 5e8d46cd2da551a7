#include <doctest.h>

#include "omegalie/freealg.hpp"
#include "omegalie/random.hpp"

using namespace omegalie;

namespace {

const CycNum w = CycNum::omega();
const CycNum wb = CycNum::omega_bar();

// letters a..f as 1..5 (a b c d f)
constexpr int a = 1, b = 2, c = 3, d = 4, f = 5;

FlatWord fw(std::vector<int> g) { return FlatWord(std::move(g)); }

FreeExpr random_expr(Sampler& s) {
    FreeExpr e;
    for (int t = 0; t < 4; ++t) {
        std::vector<int> g;
        for (int k = 0; k < 5; ++k) g.push_back(static_cast<int>(s.integer(1, 3)));
        e.add_term(FlatWord(g), s.cyc());
    }
    return e;
}

}  // namespace

TEST_CASE("flatten examples") {
    CHECK(flatten({{a, b, c, d, f}, Slot::Left}, AssocKind::First) == fw({a, b, c, d, f}));
    CHECK(flatten({{a, b, c, d, f}, Slot::Middle}, AssocKind::First) == fw({a, b, c, d, f}));
    CHECK(flatten({{a, b, c, d, f}, Slot::Middle}, AssocKind::Second) == fw({a, d, c, b, f}));
    CHECK(flatten({{a, b, c, d, f}, Slot::Right}, AssocKind::Second) == fw({a, b, c, d, f}));
}

TEST_CASE("first kind ignores the slot") {
    for (auto slot : {Slot::Left, Slot::Middle, Slot::Right})
        CHECK(flatten({{3, 1, 4, 1, 5}, slot}, AssocKind::First) == fw({3, 1, 4, 1, 5}));
}

TEST_CASE("second kind middle rule is an involution") {
    const BracketedWord x{{1, 2, 3, 4, 5}, Slot::Middle};
    const auto once = flatten(x, AssocKind::Second).gens();
    const BracketedWord y{{once[0], once[1], once[2], once[3], once[4]}, Slot::Middle};
    CHECK(flatten(y, AssocKind::Second) == fw({1, 2, 3, 4, 5}));
}

TEST_CASE("flat words of bad length are rejected") {
    CHECK_THROWS_AS(FlatWord({1, 2}), DegreeError);
    CHECK_THROWS_AS(FlatWord({1, 2, 3, 4}), DegreeError);
    CHECK_NOTHROW(FlatWord({1}));
    CHECK_NOTHROW(FlatWord({1, 2, 3}));
}

TEST_CASE("expression arithmetic") {
    const FreeExpr e = FreeExpr::monomial(fw({a, b, c, d, f}), CycNum(Rat(2), Rat(-1)));
    CHECK((e + CycNum(-1) * e).is_zero());
    CHECK(expr_scale(w, expr_scale(wb, e)) == e);
    FreeExpr sum = FreeExpr::monomial(fw({a, b, c, d, f})) + FreeExpr::monomial(fw({a, b, c, d, f}), w) +
                   FreeExpr::monomial(fw({a, b, c, d, f}), wb);
    CHECK(sum.is_zero());
    CHECK(sum.size() == 0);
}

TEST_CASE("zero coefficients are never stored") {
    FreeExpr e;
    e.add_term(fw({1, 2, 3}), CycNum());
    CHECK(e.is_zero());
    e.add_term(fw({1, 2, 3}), CycNum(2));
    e.add_term(fw({1, 2, 3}), CycNum(-2));
    CHECK(e.terms().empty());
}

TEST_CASE("reduce examples") {
    const std::vector<std::pair<CycNum, BracketedWord>> three{
        {CycNum(1), {{a, b, c, d, f}, Slot::Left}},
        {w, {{a, b, c, d, f}, Slot::Middle}},
        {wb, {{a, b, c, d, f}, Slot::Right}}};
    CHECK(reduce(three, AssocKind::First).is_zero());

    const auto single = reduce({{CycNum(1), {{a, b, c, d, f}, Slot::Left}}}, AssocKind::First);
    CHECK(single.size() == 1);
    CHECK(single.coeff(fw({a, b, c, d, f})) == CycNum(1));

    const std::vector<std::pair<CycNum, BracketedWord>> mid{{CycNum(1), {{a, b, c, d, f}, Slot::Middle}}};
    CHECK(reduce(mid, AssocKind::Second) == FreeExpr::monomial(fw({a, d, c, b, f})));
    CHECK(reduce(mid, AssocKind::First) == FreeExpr::monomial(fw({a, b, c, d, f})));
}

TEST_CASE("reducing a reduced expression changes nothing") {
    const std::vector<std::pair<CycNum, BracketedWord>> terms{
        {CycNum(3), {{1, 2, 3, 4, 5}, Slot::Middle}}, {w, {{5, 4, 3, 2, 1}, Slot::Right}}};
    for (auto kind : {AssocKind::First, AssocKind::Second}) {
        const FreeExpr once = reduce(terms, kind);
        std::vector<std::pair<CycNum, BracketedWord>> again;
        for (const auto& [word, coeff] : once.terms()) {
            const auto& g = word.gens();
            again.push_back({coeff, {{g[0], g[1], g[2], g[3], g[4]}, Slot::Left}});
        }
        CHECK(reduce(again, kind) == once);
    }
}

TEST_CASE("expressions form a vector space") {
    Sampler s(5);
    for (int t = 0; t < 50; ++t) {
        const FreeExpr x = random_expr(s), y = random_expr(s), z = random_expr(s);
        const CycNum p = s.cyc(), q = s.cyc();
        CHECK((x + y) + z == x + (y + z));
        CHECK(x + y == y + x);
        CHECK(p * (x + y) == p * x + p * y);
        CHECK((p + q) * x == p * x + q * x);
        CHECK((p * q) * x == p * (q * x));
        CHECK(CycNum(1) * x == x);
        CHECK((x + FreeExpr()) == x);
    }
}

TEST_CASE("free algebra products") {
    const FreeAlgebra first(AssocKind::First), second(AssocKind::Second);
    const auto g = [](int i) { return FreeExpr::generator(i); };
    CHECK(first.product(g(1), g(2), g(3)) == FreeExpr::monomial(fw({1, 2, 3})));

    const FreeExpr inner = first.product(g(2), g(3), g(4));
    CHECK(first.product(g(1), inner, g(5)) == FreeExpr::monomial(fw({1, 2, 3, 4, 5})));
    const FreeExpr inner2 = second.product(g(2), g(3), g(4));
    CHECK(second.product(g(1), inner2, g(5)) == FreeExpr::monomial(fw({1, 4, 3, 2, 5})));
    CHECK(second.product(inner2, g(1), g(5)) == FreeExpr::monomial(fw({2, 3, 4, 1, 5})));

    // (abc)df = a(dcb)f = ab(cdf) in the second-kind algebra
    const FreeExpr left = second.product(second.product(g(1), g(2), g(3)), g(4), g(5));
    const FreeExpr middle = second.product(g(1), second.product(g(4), g(3), g(2)), g(5));
    const FreeExpr right = second.product(g(1), g(2), second.product(g(3), g(4), g(5)));
    CHECK(left == middle);
    CHECK(left == right);

    CHECK_THROWS_AS(first.product(inner, inner, g(1)), DegreeError);
    CHECK_THROWS_AS(first.product(first.product(inner, g(1), g(2)), g(1), g(2)), DegreeError);
}

TEST_CASE("products are trilinear") {
    const FreeAlgebra alg(AssocKind::First);
    const auto g = [](int i) { return FreeExpr::generator(i); };
    const FreeExpr x = CycNum(2) * g(1) + w * g(2);
    CHECK(alg.product(x, g(3), g(4)) ==
          CycNum(2) * alg.product(g(1), g(3), g(4)) + w * alg.product(g(2), g(3), g(4)));
}

TEST_CASE("parse kinds") {
    CHECK(parse_assoc_kind("first") == AssocKind::First);
    CHECK(parse_assoc_kind("II") == AssocKind::Second);
    CHECK(parse_assoc_kind("2") == AssocKind::Second);
    CHECK_FALSE(parse_assoc_kind("third").has_value());
}

TEST_CASE("rendering") {
    CHECK(BracketedWord{{1, 2, 3, 4, 5}, Slot::Middle}.str() == "a1.(a2.a3.a4).a5");
    CHECK(fw({1, 2, 3}).str() == "a1.a2.a3");
}
