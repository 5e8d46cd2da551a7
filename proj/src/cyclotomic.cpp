#include "omegalie/cyclotomic.hpp"

#include <sstream>

namespace omegalie {

Rat::Rat(long num, long den) {
    if (den == 0) throw DivisionByZero();
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rat::Rat(mpq_class q) : q_(std::move(q)) {
    if (sgn(q_.get_den()) == 0) throw DivisionByZero();
    q_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
    auto bad = [&] {
        return std::invalid_argument("malformed rational '" + std::string(text) + "'");
    };
    auto valid_int = [](std::string_view s, bool allow_sign) {
        if (!s.empty() && allow_sign && s.front() == '-') s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false)) throw bad();
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw DivisionByZero();
    return Rat(mpq_class(n, d));
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw DivisionByZero();
    q_ /= o.q_;
    return *this;
}

Rat CycNum::norm() const {
    return one_ * one_ - one_ * omega_ + omega_ * omega_;
}

CycNum CycNum::conj() const {
    return CycNum(one_ - omega_, -omega_);
}

CycNum CycNum::inv() const {
    if (is_zero()) throw DivisionByZero();
    const Rat n = norm();
    CycNum c = conj();
    return CycNum(c.one_ / n, c.omega_ / n);
}

CycNum CycNum::pow(std::int64_t k) const {
    if (k < 0) return inv().pow(-k);
    CycNum result(1);
    CycNum base = *this;
    while (k > 0) {
        if (k & 1) result *= base;
        base *= base;
        k >>= 1;
    }
    return result;
}

CycNum& CycNum::operator+=(const CycNum& o) {
    one_ += o.one_;
    omega_ += o.omega_;
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
    one_ -= o.one_;
    omega_ -= o.omega_;
    return *this;
}

// (a + bw)(c + dw) = ac + (ad + bc)w + bd w^2, w^2 = -1 - w
CycNum& CycNum::operator*=(const CycNum& o) {
    const Rat bd = omega_ * o.omega_;
    Rat re = one_ * o.one_ - bd;
    Rat im = one_ * o.omega_ + omega_ * o.one_ - bd;
    one_ = std::move(re);
    omega_ = std::move(im);
    return *this;
}

std::string CycNum::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    if (!one_.is_zero()) os << one_;
    if (!omega_.is_zero()) {
        Rat mag = omega_.sign() < 0 ? -omega_ : omega_;
        if (!one_.is_zero())
            os << (omega_.sign() < 0 ? " - " : " + ");
        else if (omega_.sign() < 0)
            os << "-";
        if (!mag.is_one()) os << mag;
        os << "w";
    }
    return os.str();
}

CycNum conj(const CycNum& x) { return x.conj(); }
CycNum inv(const CycNum& x) { return x.inv(); }

CycNum epsilon_power(std::int64_t k) {
    std::int64_t r = k % 6;
    if (r < 0) r += 6;
    return CycNum::epsilon().pow(r);
}

}  // namespace omegalie
