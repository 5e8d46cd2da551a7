#include "omegalie/json_io.hpp"

#include <cstddef>

namespace omegalie {

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw JsonSchemaError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

Json to_json(const Rat& r) { return r.str(); }

Json to_json(const CycNum& c) {
    Json j = Json::object();
    j["one"] = c.one_part().str();
    j["omega"] = c.omega_part().str();
    return j;
}

Json to_json(const Vec& v) {
    Json j = Json::array();
    for (const auto& x : v) j.push_back(to_json(x));
    return j;
}

Json to_json(const Matrix& m) {
    Json j = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
        j.push_back(std::move(row));
    }
    return j;
}

Json to_json(const CubicMatrix& a) {
    const std::size_t n = a.order();
    Json j = Json::array();
    for (std::size_t i = 0; i < n; ++i) {
        Json plane = Json::array();
        for (std::size_t k = 0; k < n; ++k) {
            Json row = Json::array();
            for (std::size_t l = 0; l < n; ++l) row.push_back(to_json(a(i, k, l)));
            plane.push_back(std::move(row));
        }
        j.push_back(std::move(plane));
    }
    return j;
}

Json to_json(const FreeExpr& e) {
    Json j = Json::array();
    for (const auto& [w, c] : e.terms()) j.push_back(Json{{"word", w.gens()}, {"coeff", to_json(c)}});
    return j;
}

Json to_json(const Tensor3& t) {
    return Json{{"n", t.dim()}, {"entries", to_json(t.data())}, {"index_order", "i,j,k"}};
}

Json to_json(const Tensor13& c) {
    return Json{{"n", c.dim()}, {"entries", to_json(c.data())}, {"index_order", "m,i,k,l"}};
}

Json to_json(const VerificationReport& rep) {
    Json words = Json::array();
    for (const auto& [w, c] : rep.nonzero_words) words.push_back(Json{{"word", w.gens()}, {"coeff", to_json(c)}});
    return Json{{"kind", to_string(rep.kind)},
                {"bracketed_terms", rep.bracketed_term_count},
                {"flat_words", rep.flat_word_count},
                {"min_contributions", rep.min_contributions},
                {"max_contributions", rep.max_contributions},
                {"verified", rep.verified()},
                {"nonzero_words", std::move(words)}};
}

Json to_json(const TraceEntry& entry) {
    return Json{{"source", entry.source.str()},
                {"slot", to_string(entry.slot)},
                {"monomial", entry.monomial.str()},
                {"coeff", to_json(entry.coeff)}};
}

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (!j.is_string()) throw JsonSchemaError("rational must be a string \"p/q\" or an integer");
    try {
        return Rat::parse(j.get<std::string>());
    } catch (const std::exception& e) {
        throw JsonSchemaError(std::string("bad rational: ") + e.what());
    }
}

CycNum cyc_from_json(const Json& j) {
    if (j.is_number_integer() || j.is_string()) return CycNum(rat_from_json(j));
    if (!j.is_object()) throw JsonSchemaError("Q(w) value must be an object {\"one\", \"omega\"}");
    for (const auto& [key, _] : j.items())
        if (key != "one" && key != "omega") throw JsonSchemaError("unknown key in Q(w) value: " + key);
    const Rat a = j.contains("one") ? rat_from_json(j.at("one")) : Rat(0);
    const Rat b = j.contains("omega") ? rat_from_json(j.at("omega")) : Rat(0);
    return CycNum(a, b);
}

Vec vec_from_json(const Json& j) {
    if (!j.is_array()) throw JsonSchemaError("expected an array");
    Vec v;
    v.reserve(j.size());
    for (const auto& x : j) v.push_back(cyc_from_json(x));
    return v;
}

Matrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw JsonSchemaError("matrix must be a non-empty array of rows");
    const std::size_t rows = j.size();
    if (!j[0].is_array() || j[0].empty()) throw JsonSchemaError("matrix rows must be non-empty arrays");
    const std::size_t cols = j[0].size();
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols) throw JsonSchemaError("ragged matrix at row " + std::to_string(r));
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = cyc_from_json(j[r][c]);
    }
    return m;
}

CubicMatrix cubic_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw JsonSchemaError("cubic matrix must be a non-empty nested array");
    const std::size_t n = j.size();
    CubicMatrix a(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!j[i].is_array() || j[i].size() != n) throw JsonSchemaError("ragged cubic matrix at [" + std::to_string(i) + "]");
        for (std::size_t k = 0; k < n; ++k) {
            const auto& row = j[i][k];
            if (!row.is_array() || row.size() != n)
                throw JsonSchemaError("ragged cubic matrix at [" + std::to_string(i) + "][" + std::to_string(k) + "]");
            for (std::size_t l = 0; l < n; ++l) a(i, k, l) = cyc_from_json(row[l]);
        }
    }
    return a;
}

namespace {

std::pair<std::size_t, Vec> tensor_body(const Json& j, std::size_t rank, const char* order) {
    if (!j.is_object()) throw JsonSchemaError("tensor must be an object");
    if (!j.contains("n") || !j.at("n").is_number_unsigned())
        throw JsonSchemaError("tensor needs a non-negative integer \"n\"");
    if (!j.contains("entries")) throw JsonSchemaError("tensor needs \"entries\"");
    if (j.contains("index_order") && j.at("index_order") != order)
        throw JsonSchemaError(std::string("unsupported index_order, expected \"") + order + "\"");
    const std::size_t n = j.at("n").get<std::size_t>();
    std::size_t expected = 1;
    for (std::size_t r = 0; r < rank; ++r) expected *= n;
    Vec entries = vec_from_json(j.at("entries"));
    if (entries.size() != expected)
        throw JsonSchemaError("expected " + std::to_string(expected) + " entries, got " + std::to_string(entries.size()));
    return {n, std::move(entries)};
}

}  // namespace

Tensor3 tensor3_from_json(const Json& j) {
    auto [n, entries] = tensor_body(j, 3, "i,j,k");
    return Tensor3(n, std::move(entries));
}

Tensor13 tensor13_from_json(const Json& j) {
    auto [n, entries] = tensor_body(j, 4, "m,i,k,l");
    Tensor13 c(n);
    c.data() = std::move(entries);
    return c;
}

}  // namespace omegalie
