#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "spinor/bigint.hpp"
#include "spinor/errors.hpp"

namespace spinor {

/// Value of the p-adic valuation: a nonnegative integer, or infinity for 0.
/// Infinity compares greater than every finite value.
class Valuation {
public:
    static Valuation infinite() noexcept { return Valuation(true, 0); }
    static Valuation finite(std::int64_t v) noexcept { return Valuation(false, v); }

    bool is_infinite() const noexcept { return infinite_; }

    std::int64_t value() const {
        if (infinite_) throw Error("valuation of zero is infinite");
        return v_;
    }

    friend bool operator==(const Valuation& a, const Valuation& b) noexcept {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.v_ == b.v_);
    }

    friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) noexcept {
        if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
        if (a.infinite_) return std::strong_ordering::greater;
        if (b.infinite_) return std::strong_ordering::less;
        return a.v_ <=> b.v_;
    }

    friend Valuation operator+(const Valuation& a, const Valuation& b) noexcept {
        if (a.infinite_ || b.infinite_) return infinite();
        return finite(a.v_ + b.v_);
    }

private:
    Valuation(bool inf, std::int64_t v) : infinite_(inf), v_(v) {}
    bool infinite_;
    std::int64_t v_;
};

std::ostream& operator<<(std::ostream& os, const Valuation& v);

/// An element of Z localized at the prime p: a fraction num/den in lowest
/// terms with den > 0 and p coprime to den.  Arithmetic is exact; the only
/// partial operation is division, which must stay inside the localization
/// (valuation of the divisor at most the valuation of the dividend).
class LocalizedRational {
public:
    LocalizedRational(BigInt numerator, BigInt denominator, std::int64_t p);

    static LocalizedRational integer(BigInt value, std::int64_t p);
    static LocalizedRational zero(std::int64_t p) { return integer(0, p); }
    static LocalizedRational one(std::int64_t p) { return integer(1, p); }
    /// p^exponent, exponent >= 0.
    static LocalizedRational p_power(std::int64_t p, std::int64_t exponent);
    /// Parses "num/den" or "num".
    static LocalizedRational parse(std::string_view text, std::int64_t p);

    const BigInt& numerator() const noexcept { return num_; }
    const BigInt& denominator() const noexcept { return den_; }
    std::int64_t prime() const noexcept { return p_; }

    bool is_zero() const noexcept { return num_ == 0; }
    bool is_unit() const { return !is_zero() && valuation().value() == 0; }

    /// Exact power of p dividing this element; infinite for 0.
    Valuation valuation() const;

    /// The unit u with *this == u * p^valuation().  Undefined for 0.
    LocalizedRational unit_part() const;

    LocalizedRational operator-() const;
    friend LocalizedRational operator+(const LocalizedRational& a, const LocalizedRational& b);
    friend LocalizedRational operator-(const LocalizedRational& a, const LocalizedRational& b);
    friend LocalizedRational operator*(const LocalizedRational& a, const LocalizedRational& b);
    /// Throws NonUnitDenominator if the quotient leaves Z_(p).
    friend LocalizedRational operator/(const LocalizedRational& a, const LocalizedRational& b);

    friend bool operator==(const LocalizedRational& a, const LocalizedRational& b);

    std::string to_fraction_string() const;

private:
    LocalizedRational() : num_(0), den_(1), p_(2) {}
    void normalize();
    static void check_same_prime(const LocalizedRational& a, const LocalizedRational& b);

    BigInt num_;
    BigInt den_;
    std::int64_t p_;
};

std::ostream& operator<<(std::ostream& os, const LocalizedRational& x);

} // namespace spinor
