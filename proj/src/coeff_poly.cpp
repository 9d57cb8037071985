#include "hookdist/coeff_poly.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hookdist {

CoeffPoly::CoeffPoly(const Rational& constant) {
    if (!constant.is_zero()) {
        coeffs_.push_back(constant);
    }
}

CoeffPoly CoeffPoly::monomial(const Rational& coeff, int exponent) {
    CoeffPoly p;
    if (!coeff.is_zero()) {
        p.low_ = exponent;
        p.coeffs_.push_back(coeff);
    }
    return p;
}

CoeffPoly CoeffPoly::from_terms(const std::vector<std::pair<int, Rational>>& terms) {
    CoeffPoly p;
    for (const auto& [e, c] : terms) {
        p += monomial(c, e);
    }
    return p;
}

Rational CoeffPoly::coeff(int exponent) const {
    if (coeffs_.empty() || exponent < low_ || exponent > max_exponent()) {
        return Rational(0);
    }
    return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::vector<std::pair<int, Rational>> CoeffPoly::terms() const {
    std::vector<std::pair<int, Rational>> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (!coeffs_[i].is_zero()) {
            out.emplace_back(low_ + static_cast<int>(i), coeffs_[i]);
        }
    }
    return out;
}

std::size_t CoeffPoly::term_count() const {
    return static_cast<std::size_t>(
        std::count_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return !c.is_zero(); }));
}

bool CoeffPoly::has_nonnegative_integer_coeffs() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return c.is_integer() && c.sign() >= 0; });
}

void CoeffPoly::trim() {
    auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return !c.is_zero(); });
    if (first == coeffs_.end()) {
        coeffs_.clear();
        low_ = 0;
        return;
    }
    auto last = std::find_if(coeffs_.rbegin(), coeffs_.rend(), [](const Rational& c) { return !c.is_zero(); });
    coeffs_.erase(last.base(), coeffs_.end());
    const auto lead = first - coeffs_.begin();
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), first);
        low_ += static_cast<int>(lead);
    }
}

void CoeffPoly::ensure_window(int low, int high) {
    if (coeffs_.empty()) {
        low_ = low;
        coeffs_.resize(static_cast<std::size_t>(high - low + 1));
        return;
    }
    if (low < low_) {
        coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - low), Rational());
        low_ = low;
    }
    if (high > max_exponent()) {
        coeffs_.resize(static_cast<std::size_t>(high - low_ + 1));
    }
}

CoeffPoly& CoeffPoly::operator+=(const CoeffPoly& rhs) {
    if (rhs.is_zero()) {
        return *this;
    }
    ensure_window(rhs.low_, rhs.max_exponent());
    const auto offset = static_cast<std::size_t>(rhs.low_ - low_);
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[offset + i] += rhs.coeffs_[i];
    }
    trim();
    return *this;
}

CoeffPoly& CoeffPoly::operator-=(const CoeffPoly& rhs) {
    if (rhs.is_zero()) {
        return *this;
    }
    ensure_window(rhs.low_, rhs.max_exponent());
    const auto offset = static_cast<std::size_t>(rhs.low_ - low_);
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[offset + i] -= rhs.coeffs_[i];
    }
    trim();
    return *this;
}

void CoeffPoly::add_product(const CoeffPoly& a, const CoeffPoly& b) {
    if (a.is_zero() || b.is_zero()) {
        return;
    }
    ensure_window(a.low_ + b.low_, a.max_exponent() + b.max_exponent());
    const auto offset = static_cast<std::size_t>(a.low_ + b.low_ - low_);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        const Rational& ai = a.coeffs_[i];
        if (ai.is_zero()) {
            continue;
        }
        Rational* out = coeffs_.data() + offset + i;
        if (ai.is_one()) {
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                if (!b.coeffs_[j].is_zero()) out[j] += b.coeffs_[j];
            }
        } else if (ai.is_minus_one()) {
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                if (!b.coeffs_[j].is_zero()) out[j] -= b.coeffs_[j];
            }
        } else {
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                if (!b.coeffs_[j].is_zero()) out[j].add_product(ai, b.coeffs_[j]);
            }
        }
    }
    trim();
}

void CoeffPoly::add_scaled(const CoeffPoly& a, const Rational& s) {
    if (a.is_zero() || s.is_zero()) {
        return;
    }
    ensure_window(a.low_, a.max_exponent());
    const auto offset = static_cast<std::size_t>(a.low_ - low_);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (!a.coeffs_[i].is_zero()) {
            coeffs_[offset + i].add_product(a.coeffs_[i], s);
        }
    }
    trim();
}

CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b) {
    CoeffPoly out;
    out.add_product(a, b);
    return out;
}

CoeffPoly& CoeffPoly::operator*=(const CoeffPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

CoeffPoly& CoeffPoly::operator*=(const Rational& scalar) {
    if (scalar.is_zero()) {
        coeffs_.clear();
        low_ = 0;
        return *this;
    }
    for (auto& c : coeffs_) {
        c *= scalar;
    }
    return *this;
}

CoeffPoly CoeffPoly::operator-() const {
    CoeffPoly p = *this;
    for (auto& c : p.coeffs_) {
        c = -c;
    }
    return p;
}

bool CoeffPoly::is_unit() const {
    return coeffs_.size() == 1;
}

CoeffPoly CoeffPoly::inverse() const {
    if (!is_unit()) {
        throw std::domain_error("CoeffPoly::inverse: only nonzero monomials are invertible");
    }
    return monomial(coeffs_.front().inverse(), -low_);
}

CoeffPoly CoeffPoly::shifted(int k) const {
    CoeffPoly p = *this;
    if (!p.is_zero()) {
        p.low_ += k;
    }
    return p;
}

CoeffPoly CoeffPoly::derivative() const {
    CoeffPoly out;
    for (const auto& [e, c] : terms()) {
        if (e != 0) {
            out += monomial(c * Rational(e), e - 1);
        }
    }
    return out;
}

Rational CoeffPoly::evaluate(const Rational& x) const {
    if (coeffs_.empty()) {
        return Rational(0);
    }
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    if (low_ >= 0) {
        return acc * x.pow(static_cast<unsigned>(low_));
    }
    return acc / x.pow(static_cast<unsigned>(-low_));
}

namespace {

Float128 to_float128(const Rational& r) {
    if (r.is_integer()) {
        return Float128(r.num().get_str());
    }
    return Float128(r.num().get_str()) / Float128(r.den().get_str());
}

}  // namespace

Float128 CoeffPoly::evaluate(const Float128& x) const {
    if (coeffs_.empty()) {
        return Float128(0);
    }
    Float128 acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + to_float128(*it);
    }
    return acc * boost::multiprecision::pow(x, low_);
}

std::string CoeffPoly::to_string(const std::string& var) const {
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms()) {
        if (!first) {
            os << (c.sign() < 0 ? " - " : " + ");
        } else if (c.sign() < 0) {
            os << "-";
        }
        first = false;
        const Rational mag = c.sign() < 0 ? -c : c;
        if (e == 0) {
            os << mag;
            continue;
        }
        if (!mag.is_one()) {
            os << mag << "*";
        }
        os << var;
        if (e != 1) {
            os << "^" << e;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const CoeffPoly& p) {
    return os << p.to_string();
}

}  // namespace hookdist
