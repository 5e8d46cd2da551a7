#include <doctest.h>

#include "omegalie/json_io.hpp"

using namespace omegalie;

TEST_CASE("CycNum round trip") {
    Sampler s(1);
    for (int t = 0; t < 50; ++t) {
        const CycNum x = s.cyc();
        const Json j = to_json(x);
        CHECK(cyc_from_json(j) == x);
        CHECK(cyc_from_json(parse_json(j.dump())) == x);
    }
    const Json j = to_json(CycNum(Rat(3, 4), Rat(-2)));
    CHECK(j.dump() == R"({"one":"3/4","omega":"-2"})");
    CHECK(to_json(CycNum()).dump() == R"({"one":"0","omega":"0"})");
}

TEST_CASE("CycNum decoding errors") {
    CHECK_THROWS_AS(cyc_from_json(parse_json(R"({"one":"1/0"})")), JsonSchemaError);
    CHECK_THROWS_AS(cyc_from_json(parse_json(R"({"one":"x"})")), JsonSchemaError);
    CHECK_THROWS_AS(cyc_from_json(parse_json(R"({"two":"1"})")), JsonSchemaError);
    CHECK_THROWS_AS(cyc_from_json(parse_json("1.5")), JsonSchemaError);
    CHECK(cyc_from_json(parse_json("7")) == CycNum(7));
    CHECK(cyc_from_json(parse_json(R"({"omega":"1"})")) == CycNum::omega());
}

TEST_CASE("malformed JSON reports a position") {
    try {
        parse_json("{\"n\": 2, ");
        FAIL("expected an error");
    } catch (const JsonSchemaError& e) {
        CHECK(std::string(e.what()).find("byte") != std::string::npos);
    }
}

TEST_CASE("matrices") {
    Matrix m(2, 3);
    m(0, 1) = CycNum::omega();
    m(1, 2) = CycNum(Rat(1, 2));
    CHECK(matrix_from_json(to_json(m)) == m);
    CHECK_THROWS_AS(matrix_from_json(parse_json("[[1,2],[3]]")), JsonSchemaError);
    CHECK_THROWS_AS(matrix_from_json(parse_json("[]")), JsonSchemaError);
    CHECK_THROWS_AS(matrix_from_json(parse_json("[1,2]")), JsonSchemaError);
}

TEST_CASE("cubic matrices") {
    Sampler s(2);
    const CubicMatrix a = random_cubic(s, 2);
    CHECK(cubic_from_json(to_json(a)) == a);
    CHECK_THROWS_AS(cubic_from_json(parse_json("[[[1,2],[3,4]],[[5,6],[7]]]")), JsonSchemaError);
    CHECK_THROWS_AS(cubic_from_json(parse_json("[[[1,2],[3,4]]]")), JsonSchemaError);
}

TEST_CASE("tensors") {
    Sampler s(3);
    const Tensor13 c = random_omega_symmetric(s, 2);
    const Json j = to_json(c);
    CHECK(j.at("index_order") == "m,i,k,l");
    CHECK(j.at("entries").size() == 16);
    CHECK(tensor13_from_json(j) == c);
    CHECK(tensor13_from_json(parse_json(j.dump())) == c);
    CHECK_THROWS_AS(tensor13_from_json(parse_json(R"({"n":2,"entries":[1,2,3]})")), JsonSchemaError);
    CHECK_THROWS_AS(tensor13_from_json(parse_json(R"({"entries":[]})")), JsonSchemaError);
    CHECK_THROWS_AS(tensor13_from_json(parse_json(R"({"n":1,"entries":[1],"index_order":"i,k,l,m"})")),
                    JsonSchemaError);

    const Tensor3 t(1, Vec{CycNum(2)});
    CHECK(tensor3_from_json(to_json(t)) == t);
}

TEST_CASE("free expressions serialize sorted") {
    FreeExpr e;
    e.add_term(FlatWord({3, 2, 1}), CycNum(1));
    e.add_term(FlatWord({1, 2, 3}), CycNum::omega());
    const Json j = to_json(e);
    REQUIRE(j.size() == 2);
    CHECK(j[0].at("word") == Json::array({1, 2, 3}));
    CHECK(j[1].at("word") == Json::array({3, 2, 1}));
}

TEST_CASE("reports and trace entries") {
    const Json r = to_json(verify_basic_identity(AssocKind::First));
    CHECK(r.at("bracketed_terms") == 720);
    CHECK(r.at("flat_words") == 120);
    CHECK(r.at("verified") == true);
    const auto entries = trace_word(FlatWord({1, 2, 3, 4, 5}), AssocKind::First);
    const Json e = to_json(entries.front());
    CHECK(e.contains("source"));
    CHECK(e.contains("slot"));
    CHECK(e.at("coeff").contains("omega"));
}
