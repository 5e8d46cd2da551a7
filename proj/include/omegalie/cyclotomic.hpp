#pragma once

// Exact arithmetic in Q(w), w a primitive cube root of unity.
//
// Elements are stored as a + b*w over the basis {1, w}. The reduction rule is
// w^2 = -1 - w, and complex conjugation sends w to wbar = -1 - w. The sixth
// root eps = 1 + w = -wbar satisfies eps^2 = w, eps^3 = -1.

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace omegalie {

class DivisionByZero : public std::domain_error {
public:
    DivisionByZero() : std::domain_error("division by zero") {}
};

/// Rational number, always in lowest terms with positive denominator.
class Rat {
public:
    Rat() = default;
    Rat(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    Rat(long num, long den);
    explicit Rat(mpq_class q);

    /// Parses "p/q" or "p" (decimal). Throws std::invalid_argument.
    static Rat parse(std::string_view text);

    std::string str() const { return q_.get_str(); }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    int sign() const { return sgn(q_); }

    Rat operator-() const { return Rat(mpq_class(-q_)); }
    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

private:
    mpq_class q_{0};
};

/// Element re1 + rw*w of Q(w).
class CycNum {
public:
    CycNum() = default;
    CycNum(long v) : one_(v) {}  // NOLINT(google-explicit-constructor)
    CycNum(Rat v) : one_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
    CycNum(Rat one, Rat omega) : one_(std::move(one)), omega_(std::move(omega)) {}

    static CycNum omega() { return CycNum(Rat(0), Rat(1)); }
    static CycNum omega_bar() { return CycNum(Rat(-1), Rat(-1)); }
    /// eps = 1 + w, a primitive sixth root of unity.
    static CycNum epsilon() { return CycNum(Rat(1), Rat(1)); }

    const Rat& one_part() const { return one_; }
    const Rat& omega_part() const { return omega_; }

    bool is_zero() const { return one_.is_zero() && omega_.is_zero(); }
    bool is_rational() const { return omega_.is_zero(); }

    /// Field norm x * conj(x) = a^2 - ab + b^2.
    Rat norm() const;
    CycNum conj() const;
    CycNum inv() const;
    CycNum pow(std::int64_t k) const;

    CycNum operator-() const { return CycNum(-one_, -omega_); }
    CycNum& operator+=(const CycNum& o);
    CycNum& operator-=(const CycNum& o);
    CycNum& operator*=(const CycNum& o);
    CycNum& operator/=(const CycNum& o) { return *this *= o.inv(); }

    friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
    friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
    friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
    friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }

    friend bool operator==(const CycNum& a, const CycNum& b) {
        return a.one_ == b.one_ && a.omega_ == b.omega_;
    }

    /// Plain-text rendering with w for omega, e.g. "1/2 - 3w".
    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const CycNum& x) { return os << x.str(); }

private:
    Rat one_;
    Rat omega_;
};

inline const CycNum& omega() {
    static const CycNum w = CycNum::omega();
    return w;
}
inline const CycNum& omega_bar() {
    static const CycNum wb = CycNum::omega_bar();
    return wb;
}

CycNum conj(const CycNum& x);
CycNum inv(const CycNum& x);

/// eps^k with eps = 1 + w; period 6, negative k allowed.
CycNum epsilon_power(std::int64_t k);

}  // namespace omegalie
