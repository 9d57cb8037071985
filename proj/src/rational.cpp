#include "hookdist/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace hookdist {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (sgn(den_) == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
    normalize();
}

void Rational::normalize() {
    if (sgn(den_) < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (is_integer()) {
        return;
    }
    if (sgn(num_) == 0) {
        den_ = 1;
        return;
    }
    BigInt g;
    mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    if (mpz_cmp_ui(g.get_mpz_t(), 1) != 0) {
        mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
}

Rational Rational::parse(std::string_view text) {
    if (text.empty()) {
        throw std::invalid_argument("Rational::parse: empty string");
    }
    const std::string s(text);
    try {
        if (auto slash = s.find('/'); slash != std::string::npos) {
            return Rational(BigInt(s.substr(0, slash), 10), BigInt(s.substr(slash + 1), 10));
        }
        if (auto dot = s.find('.'); dot != std::string::npos) {
            std::string digits = s.substr(0, dot) + s.substr(dot + 1);
            if (digits.empty() || digits == "-" || digits == "+") {
                throw std::invalid_argument("no digits");
            }
            if (digits.front() == '+') {
                digits.erase(0, 1);
            }
            BigInt den = 1;
            for (std::size_t i = dot + 1; i < s.size(); ++i) {
                den *= 10;
            }
            return Rational(BigInt(digits, 10), den);
        }
        std::string digits = s;
        if (digits.front() == '+') {
            digits.erase(0, 1);
        }
        return Rational(BigInt(digits, 10));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rational::parse: malformed number '" + s + "'");
    }
}

Rational& Rational::operator+=(const Rational& rhs) {
    if (is_integer() && rhs.is_integer()) {
        num_ += rhs.num_;
        return *this;
    }
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    if (is_integer() && rhs.is_integer()) {
        num_ -= rhs.num_;
        return *this;
    }
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    num_ *= rhs.num_;
    if (!(is_integer() && rhs.is_integer())) {
        den_ *= rhs.den_;
        normalize();
    }
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) {
        throw std::domain_error("Rational: division by zero");
    }
    num_ *= rhs.den_;
    den_ *= rhs.num_;
    normalize();
    return *this;
}

void Rational::add_product(const Rational& a, const Rational& b) {
    if (is_integer() && a.is_integer() && b.is_integer()) {
        mpz_addmul(num_.get_mpz_t(), a.num_.get_mpz_t(), b.num_.get_mpz_t());
        return;
    }
    *this += a * b;
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) {
        throw std::domain_error("Rational: inverse of zero");
    }
    return Rational(den_, num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.num_ * b.den_, b.num_ * a.den_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

double Rational::to_double() const {
    mpq_class q(num_, den_);
    return q.get_d();
}

std::string Rational::to_string() const {
    if (is_integer()) {
        return num_.get_str();
    }
    return num_.get_str() + "/" + den_.get_str();
}

BigInt round_half_away_scaled(const Rational& value, int places) {
    BigInt scale = 1;
    for (int i = 0; i < places; ++i) {
        scale *= 10;
    }
    // floor((2|x|*scale + 1) / 2) on |x|, sign restored afterwards.
    BigInt absnum = abs(value.num());
    BigInt twice = 2 * absnum * scale + value.den();
    BigInt twoden = 2 * value.den();
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), twoden.get_mpz_t());
    return value.sign() < 0 ? BigInt(-q) : q;
}

std::string Rational::to_decimal(int places) const {
    BigInt scaled = round_half_away_scaled(*this, places);
    const bool negative = sgn(scaled) < 0;
    std::string digits = BigInt(abs(scaled)).get_str();
    if (places > 0) {
        if (static_cast<int>(digits.size()) <= places) {
            digits.insert(0, static_cast<std::size_t>(places + 1) - digits.size(), '0');
        }
        digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
    }
    return negative ? "-" + digits : digits;
}

Rational Rational::pow(unsigned exponent) const {
    Rational result(1);
    Rational base = *this;
    while (exponent != 0) {
        if (exponent & 1U) {
            result *= base;
        }
        exponent >>= 1U;
        if (exponent != 0) {
            base *= base;
        }
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
    return os << value.to_string();
}

}  // namespace hookdist
