#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace hookdist {

using BigInt = mpz_class;

/// Exact rational number over GMP integers, kept in lowest terms with a
/// positive denominator.
///
/// Nearly every value flowing through the generating-function code is an
/// integer, so all arithmetic has a path that skips the gcd work when both
/// denominators are 1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(int value) : num_(value), den_(1) {}   // NOLINT(google-explicit-constructor)
    Rational(BigInt value) : num_(std::move(value)), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(BigInt num, BigInt den);

    /// Accepts "p", "-p", "p/q" and plain decimals such as "1.5".
    static Rational parse(std::string_view text);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return sgn(num_) == 0; }
    bool is_integer() const { return mpz_cmp_ui(den_.get_mpz_t(), 1) == 0; }
    bool is_one() const { return is_integer() && mpz_cmp_ui(num_.get_mpz_t(), 1) == 0; }
    bool is_minus_one() const { return is_integer() && mpz_cmp_si(num_.get_mpz_t(), -1) == 0; }
    int sign() const { return sgn(num_); }

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    /// *this += a * b without a temporary in the integer case.
    void add_product(const Rational& a, const Rational& b);

    Rational operator-() const;
    Rational inverse() const;

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    double to_double() const;
    std::string to_string() const;

    /// Decimal rendering rounded half away from zero to `places` digits.
    std::string to_decimal(int places) const;

    Rational pow(unsigned exponent) const;

private:
    void normalize();

    BigInt num_;
    BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

/// Rounds an exact value half away from zero to a multiple of 10^-places and
/// returns the scaled integer round(value * 10^places).
BigInt round_half_away_scaled(const Rational& value, int places);

}  // namespace hookdist
