#pragma once

#include "hookdist/rational.hpp"

#include <iosfwd>

namespace hookdist {

/// Second-order jet a0 + a1*e + a2*e^2 with e^3 = 0.
///
/// Evaluating a generating function at T = 1 + e yields F(1), F'(1) and
/// F''(1)/2 in the three slots, which is all the first two moments need.
struct Jet3 {
    Rational a0;
    Rational a1;
    Rational a2;

    Jet3() = default;
    Jet3(const Rational& c) : a0(c) {}  // NOLINT(google-explicit-constructor)
    Jet3(int c) : a0(c) {}               // NOLINT(google-explicit-constructor)
    Jet3(Rational c0, Rational c1, Rational c2) : a0(std::move(c0)), a1(std::move(c1)), a2(std::move(c2)) {}

    static Jet3 epsilon() { return {Rational(0), Rational(1), Rational(0)}; }

    bool is_zero() const { return a0.is_zero() && a1.is_zero() && a2.is_zero(); }
    bool is_unit() const { return !a0.is_zero(); }

    Jet3& operator+=(const Jet3& rhs);
    Jet3& operator-=(const Jet3& rhs);
    Jet3& operator*=(const Jet3& rhs);
    Jet3& operator*=(const Rational& s);

    void add_product(const Jet3& a, const Jet3& b);
    void add_scaled(const Jet3& a, const Rational& s);

    Jet3 operator-() const { return {-a0, -a1, -a2}; }
    Jet3 inverse() const;

    friend Jet3 operator+(Jet3 a, const Jet3& b) { return a += b; }
    friend Jet3 operator-(Jet3 a, const Jet3& b) { return a -= b; }
    friend Jet3 operator*(Jet3 a, const Jet3& b) { return a *= b; }
    friend Jet3 operator*(Jet3 a, const Rational& s) { return a *= s; }
    friend bool operator==(const Jet3&, const Jet3&) = default;
};

std::ostream& operator<<(std::ostream& os, const Jet3& j);

}  // namespace hookdist
