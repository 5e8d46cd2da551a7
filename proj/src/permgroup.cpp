#include "omegalie/permgroup.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <stdexcept>

namespace omegalie {

Perm5::Perm5() : images_{1, 2, 3, 4, 5} {}

Perm5::Perm5(std::array<int, 5> images) : images_(images) {
    std::array<bool, 5> seen{};
    for (int v : images_) {
        if (v < 1 || v > 5 || seen[v - 1]) throw std::invalid_argument("not a permutation of 1..5");
        seen[v - 1] = true;
    }
}

Perm5 Perm5::cycle(const std::vector<int>& points) {
    std::array<int, 5> img{1, 2, 3, 4, 5};
    for (std::size_t i = 0; i < points.size(); ++i) {
        const int p = points[i];
        if (p < 1 || p > 5) throw std::invalid_argument("cycle point out of range");
        img[p - 1] = points[(i + 1) % points.size()];
    }
    return Perm5(img);
}

Perm5 Perm5::then(const Perm5& other) const {
    std::array<int, 5> r{};
    for (int i = 0; i < 5; ++i) r[i] = other.images_[images_[i] - 1];
    return Perm5(r);
}

Perm5 Perm5::inverse() const {
    std::array<int, 5> r{};
    for (int i = 0; i < 5; ++i) r[images_[i] - 1] = i + 1;
    return Perm5(r);
}

Perm5 Perm5::pow(int k) const {
    const Perm5 base = k < 0 ? inverse() : *this;
    Perm5 r;
    for (int i = 0; i < std::abs(k); ++i) r = r.then(base);
    return r;
}

bool Perm5::is_identity() const { return *this == Perm5(); }

int Perm5::order() const {
    Perm5 p = *this;
    int k = 1;
    while (!p.is_identity()) {
        p = p.then(*this);
        ++k;
    }
    return k;
}

std::string Perm5::cycle_str() const {
    std::string out;
    std::array<bool, 5> done{};
    for (int start = 1; start <= 5; ++start) {
        if (done[start - 1] || images_[start - 1] == start) continue;
        out += "(";
        int p = start;
        bool first = true;
        while (!done[p - 1]) {
            done[p - 1] = true;
            if (!first) out += " ";
            out += std::to_string(p);
            first = false;
            p = images_[p - 1];
        }
        out += ")";
    }
    return out.empty() ? "()" : out;
}

Perm5 sigma() { return Perm5::cycle({1, 2, 3, 4, 5}); }
Perm5 tau() { return Perm5::cycle({2, 4, 5, 3}); }

bool PermSet::is_group() const {
    if (!contains(Perm5())) return false;
    for (const auto& a : elements) {
        if (!contains(a.inverse())) return false;
        for (const auto& b : elements)
            if (!contains(a * b)) return false;
    }
    return true;
}

PermSet generate(const std::vector<Perm5>& gens) {
    PermSet result;
    result.generators = gens;
    result.elements.insert(Perm5());
    std::deque<Perm5> frontier{Perm5()};
    while (!frontier.empty()) {
        const Perm5 g = frontier.front();
        frontier.pop_front();
        for (const auto& s : gens) {
            Perm5 h = g * s;
            if (result.elements.insert(h).second) frontier.push_back(h);
        }
    }
    return result;
}

bool PresentationReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const RelationCheck& c) { return c.pass; });
}

PresentationReport verify_presentation(const PermSet& p) {
    const Perm5 s = p.generators.size() > 0 ? p.generators[0] : Perm5();
    const Perm5 t = p.generators.size() > 1 ? p.generators[1] : Perm5();
    PresentationReport r;
    r.checks.push_back({"sigma^5 = e", s.pow(5).is_identity()});
    r.checks.push_back({"tau^4 = e", t.pow(4).is_identity()});
    r.checks.push_back({"tau sigma tau^-1 = sigma^2", t * s * t.inverse() == s.pow(2)});
    r.checks.push_back({"order = 20", p.order() == 20});
    return r;
}

namespace {

// exponent of sigma in each row position, per row
constexpr int kRowSigma[4][5] = {
    {0, 1, 2, 3, 4},
    {0, 3, 1, 4, 2},
    {0, 4, 3, 2, 1},
    {0, 2, 4, 1, 3},
};

std::string power_name(const char* sym, int k) {
    if (k == 0) return "";
    return k == 1 ? std::string(sym) : std::string(sym) + "^" + std::to_string(k);
}

}  // namespace

std::vector<std::vector<Perm5>> coset_rows() {
    const Perm5 s = sigma();
    const Perm5 t = tau();
    std::vector<std::vector<Perm5>> rows(4);
    for (int r = 0; r < 4; ++r)
        for (int k : kRowSigma[r]) rows[r].push_back(t.pow(r) * s.pow(k));
    return rows;
}

std::vector<std::vector<std::string>> coset_row_names() {
    std::vector<std::vector<std::string>> rows(4);
    for (int r = 0; r < 4; ++r)
        for (int k : kRowSigma[r]) {
            std::string name = power_name("tau", r);
            const std::string sp = power_name("sigma", k);
            if (!name.empty() && !sp.empty()) name += " ";
            name += sp;
            rows[r].push_back(name.empty() ? "e" : name);
        }
    return rows;
}

PermSet ga15() { return generate({sigma(), tau()}); }
PermSet d10() { return generate({sigma(), tau().pow(2)}); }
PermSet z5() { return generate({sigma()}); }

}  // namespace omegalie
