#include "omegalie/freealg.hpp"

#include <algorithm>
#include <sstream>

namespace omegalie {

namespace {

std::string letter(int g) { return "a" + std::to_string(g); }

std::string join_letters(const int* first, const int* last) {
    std::string s;
    for (const int* p = first; p != last; ++p) {
        if (p != first) s += ".";
        s += letter(*p);
    }
    return s;
}

}  // namespace

std::string to_string(AssocKind kind) {
    return kind == AssocKind::First ? "first" : "second";
}

std::optional<AssocKind> parse_assoc_kind(const std::string& text) {
    if (text == "first" || text == "1" || text == "I") return AssocKind::First;
    if (text == "second" || text == "2" || text == "II") return AssocKind::Second;
    return std::nullopt;
}

std::string to_string(Slot slot) {
    switch (slot) {
        case Slot::Left: return "left";
        case Slot::Middle: return "middle";
        case Slot::Right: return "right";
    }
    return "?";
}

std::string BracketedWord::str() const {
    const int* g = gens.data();
    switch (slot) {
        case Slot::Left:
            return "(" + join_letters(g, g + 3) + ")." + join_letters(g + 3, g + 5);
        case Slot::Middle:
            return letter(g[0]) + ".(" + join_letters(g + 1, g + 4) + ")." + letter(g[4]);
        case Slot::Right:
            return join_letters(g, g + 2) + ".(" + join_letters(g + 2, g + 5) + ")";
    }
    return {};
}

FlatWord::FlatWord(std::vector<int> gens) : gens_(std::move(gens)) {
    const auto n = gens_.size();
    if (n != 1 && n != 3 && n != 5)
        throw DegreeError("flat word of length " + std::to_string(n) + " (expected 1, 3 or 5)");
}

std::string FlatWord::str() const {
    return join_letters(gens_.data(), gens_.data() + gens_.size());
}

FlatWord flatten(const BracketedWord& w, AssocKind kind) {
    std::vector<int> g(w.gens.begin(), w.gens.end());
    if (kind == AssocKind::Second && w.slot == Slot::Middle) std::reverse(g.begin() + 1, g.begin() + 4);
    return FlatWord(std::move(g));
}

FreeExpr FreeExpr::generator(int index) {
    return monomial(FlatWord({index}));
}

FreeExpr FreeExpr::monomial(FlatWord w, CycNum c) {
    FreeExpr e;
    e.add_term(w, c);
    return e;
}

CycNum FreeExpr::coeff(const FlatWord& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? CycNum() : it->second;
}

void FreeExpr::add_term(const FlatWord& w, const CycNum& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

FreeExpr& FreeExpr::operator+=(const FreeExpr& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

FreeExpr operator*(const CycNum& c, const FreeExpr& e) {
    FreeExpr r;
    if (c.is_zero()) return r;
    for (const auto& [w, x] : e.terms_) r.terms_.emplace(w, c * x);
    return r;
}

std::string FreeExpr::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c << ")*" << w.str();
    }
    return os.str();
}

FreeExpr expr_add(const FreeExpr& a, const FreeExpr& b) { return a + b; }
FreeExpr expr_scale(const CycNum& c, const FreeExpr& e) { return c * e; }

FreeExpr reduce(const std::vector<std::pair<CycNum, BracketedWord>>& terms, AssocKind kind) {
    FreeExpr r;
    for (const auto& [c, w] : terms) r.add_term(flatten(w, kind), c);
    return r;
}

FreeExpr FreeAlgebra::product(const FreeExpr& a, const FreeExpr& b, const FreeExpr& c) const {
    FreeExpr r;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms())
            for (const auto& [wc, cc] : c.terms()) {
                const std::array<std::size_t, 3> deg{wa.degree(), wb.degree(), wc.degree()};
                const std::size_t total = deg[0] + deg[1] + deg[2];
                std::vector<int> seq;
                seq.reserve(total);
                for (const FlatWord* w : {&wa, &wb, &wc})
                    seq.insert(seq.end(), w->gens().begin(), w->gens().end());
                const CycNum coeff = ca * cb * cc;
                if (total == 3) {
                    r.add_term(FlatWord(std::move(seq)), coeff);
                    continue;
                }
                if (total != 5 || std::count(deg.begin(), deg.end(), 3u) != 1)
                    throw DegreeError("free ternary product of degrees (" + std::to_string(deg[0]) + "," +
                                      std::to_string(deg[1]) + "," + std::to_string(deg[2]) +
                                      ") is not supported");
                BracketedWord bw;
                std::copy(seq.begin(), seq.end(), bw.gens.begin());
                bw.slot = deg[0] == 3 ? Slot::Left : deg[1] == 3 ? Slot::Middle : Slot::Right;
                r.add_term(flatten(bw, kind_), coeff);
            }
    return r;
}

}  // namespace omegalie
