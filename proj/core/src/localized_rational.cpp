#include "spinor/localized_rational.hpp"

#include <ostream>
#include <sstream>

namespace spinor {

std::ostream& operator<<(std::ostream& os, const Valuation& v) {
    if (v.is_infinite()) return os << "inf";
    return os << v.value();
}

LocalizedRational::LocalizedRational(BigInt numerator, BigInt denominator, std::int64_t p)
    : num_(std::move(numerator)), den_(std::move(denominator)), p_(p) {
    if (!is_small_prime(p_)) {
        throw Error("LocalizedRational: p must be a small positive prime, got " + std::to_string(p_));
    }
    if (den_ == 0) {
        throw NonUnitDenominator("LocalizedRational: zero denominator");
    }
    normalize();
}

void LocalizedRational::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
    if (den_ % p_ == 0) {
        throw NonUnitDenominator("element " + num_.str() + "/" + den_.str() +
                                 " lies outside the localization at " + std::to_string(p_));
    }
}

LocalizedRational LocalizedRational::integer(BigInt value, std::int64_t p) {
    return LocalizedRational(std::move(value), 1, p);
}

LocalizedRational LocalizedRational::p_power(std::int64_t p, std::int64_t exponent) {
    if (exponent < 0) {
        throw NonUnitDenominator("p_power: negative exponent leaves the localization");
    }
    return integer(big_pow(p, exponent), p);
}

LocalizedRational LocalizedRational::parse(std::string_view text, std::int64_t p) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            return integer(BigInt(std::string(text)), p);
        }
        BigInt num{std::string(text.substr(0, slash))};
        BigInt den{std::string(text.substr(slash + 1))};
        return LocalizedRational(std::move(num), std::move(den), p);
    } catch (const std::runtime_error& e) {
        if (dynamic_cast<const Error*>(&e)) throw;
        throw ParseError("invalid rational literal '" + std::string(text) + "'");
    }
}

Valuation LocalizedRational::valuation() const {
    if (num_ == 0) return Valuation::infinite();
    return Valuation::finite(p_valuation(num_, p_));
}

LocalizedRational LocalizedRational::unit_part() const {
    if (num_ == 0) throw Error("unit_part of zero");
    BigInt n = num_;
    while (n % p_ == 0) n /= p_;
    LocalizedRational u;
    u.num_ = n;
    u.den_ = den_;
    u.p_ = p_;
    return u;
}

void LocalizedRational::check_same_prime(const LocalizedRational& a, const LocalizedRational& b) {
    if (a.p_ != b.p_) {
        throw PrimeMismatch("operands localized at different primes: " +
                            std::to_string(a.p_) + " vs " + std::to_string(b.p_));
    }
}

LocalizedRational LocalizedRational::operator-() const {
    LocalizedRational r = *this;
    r.num_ = -r.num_;
    return r;
}

LocalizedRational operator+(const LocalizedRational& a, const LocalizedRational& b) {
    LocalizedRational::check_same_prime(a, b);
    LocalizedRational r;
    r.p_ = a.p_;
    r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
    r.den_ = a.den_ * b.den_;
    r.normalize();
    return r;
}

LocalizedRational operator-(const LocalizedRational& a, const LocalizedRational& b) {
    return a + (-b);
}

LocalizedRational operator*(const LocalizedRational& a, const LocalizedRational& b) {
    LocalizedRational::check_same_prime(a, b);
    LocalizedRational r;
    r.p_ = a.p_;
    r.num_ = a.num_ * b.num_;
    r.den_ = a.den_ * b.den_;
    r.normalize();
    return r;
}

LocalizedRational operator/(const LocalizedRational& a, const LocalizedRational& b) {
    LocalizedRational::check_same_prime(a, b);
    if (b.is_zero()) {
        throw SingularMatrix("division by zero");
    }
    LocalizedRational r;
    r.p_ = a.p_;
    r.num_ = a.num_ * b.den_;
    r.den_ = a.den_ * b.num_;
    r.normalize(); // throws NonUnitDenominator when v(a) < v(b)
    return r;
}

bool operator==(const LocalizedRational& a, const LocalizedRational& b) {
    return a.p_ == b.p_ && a.num_ == b.num_ && a.den_ == b.den_;
}

std::string LocalizedRational::to_fraction_string() const {
    return num_.str() + "/" + den_.str();
}

std::ostream& operator<<(std::ostream& os, const LocalizedRational& x) {
    os << x.numerator();
    if (x.denominator() != 1) os << "/" << x.denominator();
    return os;
}

} // namespace spinor
