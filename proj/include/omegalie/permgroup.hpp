#pragma once

// Permutations of {1,...,5} and the chain Z5 < D10 < GA(1,5) < S5.
//
// Conventions:
//  * a permutation g acts on a letter tuple as (a_g(1), ..., a_g(5));
//  * products read left to right: (g*h)(i) = h(g(i)), so "tau sigma^3"
//    means tau followed by sigma^3. With these, tau sigma tau^-1 = sigma^2
//    and every coset row below is a run of successive cyclic shifts.

#include <array>
#include <compare>
#include <set>
#include <string>
#include <vector>

namespace omegalie {

class Perm5 {
public:
    /// Identity.
    Perm5();
    /// images[i] is the image of point i+1; throws std::invalid_argument unless a bijection of 1..5.
    explicit Perm5(std::array<int, 5> images);
    /// Builds a single cycle, e.g. {2,4,5,3}.
    static Perm5 cycle(const std::vector<int>& points);

    int operator()(int point) const { return images_.at(point - 1); }
    const std::array<int, 5>& images() const { return images_; }

    /// Apply *this, then other.
    Perm5 then(const Perm5& other) const;
    Perm5 inverse() const;
    Perm5 pow(int k) const;
    bool is_identity() const;
    int order() const;

    /// Letter tuple (t[g(1)-1], ..., t[g(5)-1]).
    template <class T>
    std::array<T, 5> apply(const std::array<T, 5>& t) const {
        std::array<T, 5> r{};
        for (int i = 0; i < 5; ++i) r[i] = t[images_[i] - 1];
        return r;
    }

    /// Cycle notation, e.g. "(1 2 3 4 5)"; identity renders as "()".
    std::string cycle_str() const;

    friend bool operator==(const Perm5&, const Perm5&) = default;
    friend auto operator<=>(const Perm5&, const Perm5&) = default;

private:
    std::array<int, 5> images_;
};

/// Left-to-right product a*b = "a then b".
inline Perm5 operator*(const Perm5& a, const Perm5& b) { return a.then(b); }

/// sigma = (1 2 3 4 5)
Perm5 sigma();
/// tau = (2 4 5 3)
Perm5 tau();

/// A finite permutation group with the generators it was built from.
struct PermSet {
    std::set<Perm5> elements;
    std::vector<Perm5> generators;

    std::size_t order() const { return elements.size(); }
    bool contains(const Perm5& p) const { return elements.count(p) > 0; }
    /// Closed under products and inverses, contains the identity.
    bool is_group() const;
};

/// Breadth-first closure of the generators under products.
PermSet generate(const std::vector<Perm5>& gens);

struct RelationCheck {
    std::string relation;
    bool pass = false;
};

struct PresentationReport {
    std::vector<RelationCheck> checks;
    bool all_pass() const;
};

/// Checks s^5 = e, t^4 = e, t s t^-1 = s^2 and |P| = 20, where s, t are
/// the first two generators of P (identity if absent).
PresentationReport verify_presentation(const PermSet& p);

/// The four rows of GA(1,5):
///   e, s, s^2, s^3, s^4
///   t, t s^3, t s, t s^4, t s^2
///   t^2, t^2 s^4, t^2 s^3, t^2 s^2, t^2 s
///   t^3, t^3 s^2, t^3 s^4, t^3 s, t^3 s^3
std::vector<std::vector<Perm5>> coset_rows();
/// Symbolic names of the row entries, e.g. "t^2 s^4".
std::vector<std::vector<std::string>> coset_row_names();

PermSet ga15();
PermSet d10();
PermSet z5();

}  // namespace omegalie
