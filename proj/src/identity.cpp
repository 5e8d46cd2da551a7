#include "omegalie/identity.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace omegalie {

std::string DoubleBracketTerm::str() const {
    std::ostringstream os;
    os << "[[a" << letters[0] << ",a" << letters[1] << ",a" << letters[2] << "],a" << letters[3] << ",a"
       << letters[4] << "]";
    return os.str();
}

std::vector<DoubleBracketTerm> terms_from_perms(const std::vector<Perm5>& perms) {
    const std::array<int, 5> base{1, 2, 3, 4, 5};
    std::vector<DoubleBracketTerm> out;
    out.reserve(perms.size());
    for (const auto& g : perms) out.push_back({g.apply(base)});
    return out;
}

std::vector<DoubleBracketTerm> build_basic_identity() {
    std::vector<Perm5> perms;
    for (const auto& row : coset_rows()) perms.insert(perms.end(), row.begin(), row.end());
    return terms_from_perms(perms);
}

std::vector<DoubleBracketTerm> build_reduced_identity() {
    const auto rows = coset_rows();
    std::vector<Perm5> perms(rows[0]);
    perms.insert(perms.end(), rows[1].begin(), rows[1].end());
    return terms_from_perms(perms);
}

std::vector<ExpandedMonomial> expand_double_brackets(const std::vector<DoubleBracketTerm>& terms,
                                                     const std::optional<CoefficientPerturbation>& perturbation) {
    using Level = CoefficientPerturbation::Level;
    const auto& table = full_bracket_terms();
    std::vector<ExpandedMonomial> out;
    out.reserve(terms.size() * 36);

    for (std::size_t t = 0; t < terms.size(); ++t) {
        const auto& l = terms[t].letters;
        const bool hit = perturbation && perturbation->term == t;
        CycNum weight(1);
        if (hit && perturbation->level == Level::Weight) weight += perturbation->delta;

        // outer bracket acts on (X, l3, l4) with X the inner bracket, slot 0
        for (std::size_t o = 0; o < table.size(); ++o) {
            CycNum co = table[o].coeff;
            if (hit && perturbation->level == Level::Outer && perturbation->index == o) co += perturbation->delta;
            const auto& po = table[o].perm;
            const auto pos_x = static_cast<std::size_t>(std::find(po.begin(), po.end(), 0u) - po.begin());
            const std::array<int, 3> outer_letters{0, l[3], l[4]};

            for (std::size_t i = 0; i < table.size(); ++i) {
                CycNum ci = table[i].coeff;
                if (hit && perturbation->level == Level::Inner && perturbation->index == i) ci += perturbation->delta;
                const auto& pi = table[i].perm;

                BracketedWord w;
                std::size_t k = 0;
                for (std::size_t j = 0; j < 3; ++j) {
                    if (po[j] == 0) {
                        for (std::size_t m = 0; m < 3; ++m) w.gens[k++] = l[pi[m]];
                    } else {
                        w.gens[k++] = outer_letters[po[j]];
                    }
                }
                w.slot = pos_x == 0 ? Slot::Left : pos_x == 1 ? Slot::Middle : Slot::Right;
                out.push_back({t, w, weight * co * ci});
            }
        }
    }
    return out;
}

VerificationReport verify_terms(const std::vector<DoubleBracketTerm>& terms, AssocKind kind,
                                const std::optional<CoefficientPerturbation>& perturbation) {
    const auto monomials = expand_double_brackets(terms, perturbation);
    std::map<FlatWord, std::pair<CycNum, std::size_t>> sums;
    for (const auto& m : monomials) {
        auto& [sum, count] = sums[flatten(m.word, kind)];
        sum += m.coeff;
        ++count;
    }

    VerificationReport rep;
    rep.kind = kind;
    rep.bracketed_term_count = monomials.size();
    rep.flat_word_count = sums.size();
    if (!sums.empty()) {
        rep.min_contributions = rep.max_contributions = sums.begin()->second.second;
        for (const auto& [w, entry] : sums) {
            rep.min_contributions = std::min(rep.min_contributions, entry.second);
            rep.max_contributions = std::max(rep.max_contributions, entry.second);
            if (!entry.first.is_zero()) rep.nonzero_words.emplace_back(w, entry.first);
        }
    }
    return rep;
}

VerificationReport verify_basic_identity(AssocKind kind) {
    return verify_terms(build_basic_identity(), kind);
}

std::vector<TraceEntry> trace_word(const FlatWord& word, AssocKind kind) {
    if (word.degree() != 5) throw DegreeError("trace_word needs a word of length 5");
    const auto terms = build_basic_identity();
    std::vector<TraceEntry> out;
    for (const auto& m : expand_double_brackets(terms))
        if (flatten(m.word, kind) == word) out.push_back({terms[m.term], m.word.slot, m.word, m.coeff});
    return out;
}

std::string render_trace_table(const std::vector<TraceEntry>& entries) {
    std::ostringstream os;
    for (std::size_t start = 0; start < entries.size(); start += 3) {
        const std::size_t end = std::min(start + 3, entries.size());
        std::vector<std::string> top;
        std::vector<std::string> bottom;
        for (std::size_t i = start; i < end; ++i) {
            top.push_back(entries[i].source.str());
            std::string c;
            if (!(entries[i].coeff == CycNum(1))) {
                c = entries[i].coeff.str();
                if (c == "-1 - w") c = "wbar";
                c += " ";
            }
            bottom.push_back(c + entries[i].monomial.str());
        }
        std::size_t width = 0;
        for (std::size_t i = 0; i < top.size(); ++i) width = std::max({width, top[i].size(), bottom[i].size()});
        auto line = [&](const std::vector<std::string>& cells) {
            std::string s;
            for (std::size_t i = 0; i < cells.size(); ++i) {
                s += cells[i];
                if (i + 1 < cells.size()) s += std::string(width + 4 - cells[i].size(), ' ');
            }
            return s + "\n";
        };
        if (start) os << "\n";
        os << line(top) << line(bottom);
    }
    return os.str();
}

}  // namespace omegalie
