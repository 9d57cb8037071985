#pragma once

#include "hookdist/rational.hpp"

#include <boost/multiprecision/float128.hpp>

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace hookdist {

using Float128 = boost::multiprecision::float128;

/// Exact Laurent polynomial in one variable with rational coefficients.
///
/// Storage is a dense window [lowest exponent, highest exponent] whose two
/// end coefficients are nonzero; the zero polynomial has an empty window.
/// Interior zeros are never reported by terms(), so the observable value is
/// the usual exponent -> nonzero coefficient map.
class CoeffPoly {
public:
    CoeffPoly() = default;
    CoeffPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
    CoeffPoly(int constant) : CoeffPoly(Rational(constant)) {}  // NOLINT(google-explicit-constructor)

    static CoeffPoly monomial(const Rational& coeff, int exponent);
    static CoeffPoly variable() { return monomial(Rational(1), 1); }
    /// Builds from (exponent, coefficient) pairs; repeated exponents add.
    static CoeffPoly from_terms(const std::vector<std::pair<int, Rational>>& terms);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.empty() || (coeffs_.size() == 1 && low_ == 0); }
    /// Lowest/highest exponent carrying a nonzero coefficient. Undefined for zero.
    int min_exponent() const { return low_; }
    int max_exponent() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
    /// Coefficient of x^exponent (zero outside the stored window).
    Rational coeff(int exponent) const;
    std::vector<std::pair<int, Rational>> terms() const;
    std::size_t term_count() const;

    /// True when no negative exponents are present.
    bool is_polynomial() const { return is_zero() || low_ >= 0; }
    /// True when every coefficient is an integer >= 0.
    bool has_nonnegative_integer_coeffs() const;

    CoeffPoly& operator+=(const CoeffPoly& rhs);
    CoeffPoly& operator-=(const CoeffPoly& rhs);
    CoeffPoly& operator*=(const CoeffPoly& rhs);
    CoeffPoly& operator*=(const Rational& scalar);

    /// *this += a * b.
    void add_product(const CoeffPoly& a, const CoeffPoly& b);
    /// *this += a * s.
    void add_scaled(const CoeffPoly& a, const Rational& s);

    CoeffPoly operator-() const;
    friend CoeffPoly operator+(CoeffPoly a, const CoeffPoly& b) { return a += b; }
    friend CoeffPoly operator-(CoeffPoly a, const CoeffPoly& b) { return a -= b; }
    friend CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b);
    friend CoeffPoly operator*(CoeffPoly a, const Rational& s) { return a *= s; }
    friend bool operator==(const CoeffPoly& a, const CoeffPoly& b) {
        return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
    }

    /// Multiplicative units are the nonzero monomials.
    bool is_unit() const;
    CoeffPoly inverse() const;

    /// Multiplies by x^k.
    CoeffPoly shifted(int k) const;

    /// Formal derivative d/dx.
    CoeffPoly derivative() const;

    Rational evaluate(const Rational& x) const;
    Float128 evaluate(const Float128& x) const;

    std::string to_string(const std::string& var = "T") const;

private:
    void trim();
    void ensure_window(int low, int high);

    int low_ = 0;
    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CoeffPoly& p);

}  // namespace hookdist
