#include "hookdist/jet.hpp"

#include <ostream>
#include <stdexcept>

namespace hookdist {

Jet3& Jet3::operator+=(const Jet3& rhs) {
    a0 += rhs.a0;
    a1 += rhs.a1;
    a2 += rhs.a2;
    return *this;
}

Jet3& Jet3::operator-=(const Jet3& rhs) {
    a0 -= rhs.a0;
    a1 -= rhs.a1;
    a2 -= rhs.a2;
    return *this;
}

Jet3& Jet3::operator*=(const Jet3& rhs) {
    Jet3 out;
    out.add_product(*this, rhs);
    *this = std::move(out);
    return *this;
}

Jet3& Jet3::operator*=(const Rational& s) {
    a0 *= s;
    a1 *= s;
    a2 *= s;
    return *this;
}

void Jet3::add_product(const Jet3& a, const Jet3& b) {
    a0.add_product(a.a0, b.a0);
    a1.add_product(a.a0, b.a1);
    a1.add_product(a.a1, b.a0);
    a2.add_product(a.a0, b.a2);
    a2.add_product(a.a1, b.a1);
    a2.add_product(a.a2, b.a0);
}

void Jet3::add_scaled(const Jet3& a, const Rational& s) {
    a0.add_product(a.a0, s);
    a1.add_product(a.a1, s);
    a2.add_product(a.a2, s);
}

Jet3 Jet3::inverse() const {
    if (a0.is_zero()) {
        throw std::domain_error("Jet3::inverse: constant term is zero");
    }
    const Rational inv0 = a0.inverse();
    const Rational inv0_sq = inv0 * inv0;
    return {inv0, -a1 * inv0_sq, (a1 * a1 * inv0 - a2) * inv0_sq};
}

std::ostream& operator<<(std::ostream& os, const Jet3& j) {
    return os << "(" << j.a0 << ", " << j.a1 << ", " << j.a2 << ")";
}

}  // namespace hookdist
