#pragma once

#include "hookdist/coeff_poly.hpp"
#include "hookdist/jet.hpp"
#include "hookdist/parallel.hpp"
#include "hookdist/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hookdist {

// Uniform ring interface over Rational, CoeffPoly and Jet3.

inline bool ring_is_unit(const Rational& r) { return !r.is_zero(); }
inline bool ring_is_unit(const CoeffPoly& r) { return r.is_unit(); }
inline bool ring_is_unit(const Jet3& r) { return r.is_unit(); }

inline void ring_add_scaled(Rational& acc, const Rational& a, const Rational& s) { acc.add_product(a, s); }
inline void ring_add_scaled(CoeffPoly& acc, const CoeffPoly& a, const Rational& s) { acc.add_scaled(a, s); }
inline void ring_add_scaled(Jet3& acc, const Jet3& a, const Rational& s) { acc.add_scaled(a, s); }

inline bool ring_is_one(const Rational& r) { return r.is_one(); }
inline bool ring_is_one(const CoeffPoly& r) { return r == CoeffPoly(1); }
inline bool ring_is_one(const Jet3& r) { return r == Jet3(1); }

inline bool ring_is_minus_one(const Rational& r) { return r.is_minus_one(); }
inline bool ring_is_minus_one(const CoeffPoly& r) { return r == CoeffPoly(-1); }
inline bool ring_is_minus_one(const Jet3& r) { return r == Jet3(-1); }

/// Truncated formal power series sum_{k<=N} c_k q^k over a coefficient ring.
///
/// Results of binary operations are truncated to the smaller of the two
/// operand truncations.
template <class Ring>
class QSeries {
public:
    using ring_type = Ring;

    explicit QSeries(std::size_t truncation) : coeffs_(truncation + 1) {}

    static QSeries one(std::size_t truncation) {
        QSeries s(truncation);
        s.coeffs_[0] = Ring(1);
        return s;
    }

    /// c * q^exponent, or zero when exponent exceeds the truncation.
    static QSeries monomial(const Ring& c, std::size_t exponent, std::size_t truncation) {
        QSeries s(truncation);
        if (exponent <= truncation) {
            s.coeffs_[exponent] = c;
        }
        return s;
    }

    static QSeries from_coeffs(std::vector<Ring> coeffs, std::size_t truncation) {
        QSeries s(truncation);
        const std::size_t n = std::min(coeffs.size(), truncation + 1);
        std::move(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(n), s.coeffs_.begin());
        return s;
    }

    std::size_t truncation() const { return coeffs_.size() - 1; }
    const Ring& operator[](std::size_t k) const { return coeffs_.at(k); }
    Ring& operator[](std::size_t k) { return coeffs_.at(k); }
    const std::vector<Ring>& coeffs() const { return coeffs_; }

    friend bool operator==(const QSeries& a, const QSeries& b) { return a.coeffs_ == b.coeffs_; }

    QSeries truncated(std::size_t n) const {
        QSeries s(std::min(n, truncation()));
        std::copy_n(coeffs_.begin(), s.coeffs_.size(), s.coeffs_.begin());
        return s;
    }

    QSeries& operator+=(const QSeries& rhs) {
        shrink_to(rhs.truncation());
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            coeffs_[k] += rhs.coeffs_[k];
        }
        return *this;
    }

    QSeries& operator-=(const QSeries& rhs) {
        shrink_to(rhs.truncation());
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            coeffs_[k] -= rhs.coeffs_[k];
        }
        return *this;
    }

    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }

    /// Every coefficient multiplied by c.
    QSeries scaled(const Ring& c) const {
        QSeries s(truncation());
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            s.coeffs_[k] = coeffs_[k] * c;
        }
        return s;
    }

    /// q^k * this, keeping the truncation.
    QSeries shifted(std::size_t k) const {
        QSeries s(truncation());
        for (std::size_t i = k; i < s.coeffs_.size(); ++i) {
            s.coeffs_[i] = coeffs_[i - k];
        }
        return s;
    }

    /// Substitution q -> q^k, re-truncated at `new_truncation`.
    QSeries dilated(std::size_t k, std::size_t new_truncation) const {
        if (k == 0) {
            throw std::invalid_argument("QSeries::dilated: factor must be positive");
        }
        QSeries s(new_truncation);
        for (std::size_t i = 0; i < coeffs_.size() && i * k <= new_truncation; ++i) {
            s.coeffs_[i * k] = coeffs_[i];
        }
        return s;
    }

    /// In-place multiplication by the binomial (1 - a q^e), e >= 1.
    void multiply_binomial(const Ring& a, std::size_t e) {
        if (e == 0) {
            throw std::invalid_argument("multiply_binomial: exponent must be positive");
        }
        const Ring neg = -a;
        const bool plus = ring_is_one(neg);
        const bool minus = ring_is_minus_one(neg);
        for (std::size_t i = truncation(); i >= e; --i) {
            const Ring& src = coeffs_[i - e];
            if (plus) {
                coeffs_[i] += src;
            } else if (minus) {
                coeffs_[i] -= src;
            } else {
                coeffs_[i].add_product(neg, src);
            }
        }
    }

    /// In-place division by the binomial (1 - a q^e), e >= 1.
    void divide_binomial(const Ring& a, std::size_t e) {
        if (e == 0) {
            throw std::invalid_argument("divide_binomial: exponent must be positive");
        }
        const bool plus = ring_is_one(a);
        const bool minus = ring_is_minus_one(a);
        for (std::size_t i = e; i <= truncation(); ++i) {
            const Ring& src = coeffs_[i - e];
            if (plus) {
                coeffs_[i] += src;
            } else if (minus) {
                coeffs_[i] -= src;
            } else {
                coeffs_[i].add_product(a, src);
            }
        }
    }

private:
    void shrink_to(std::size_t n) {
        if (n < truncation()) {
            coeffs_.resize(n + 1);
        }
    }

    std::vector<Ring> coeffs_;
};

/// Schoolbook product, truncated to the smaller truncation. Output
/// coefficients are striped across `threads` workers; each coefficient is
/// accumulated by one worker in a fixed order, so the result does not
/// depend on the thread count.
template <class Ring>
QSeries<Ring> series_mul(const QSeries<Ring>& f, const QSeries<Ring>& g, unsigned threads = 1) {
    const std::size_t n = std::min(f.truncation(), g.truncation());
    QSeries<Ring> out(n);
    std::vector<std::size_t> f_nonzero;
    for (std::size_t i = 0; i <= n; ++i) {
        if (!f[i].is_zero()) f_nonzero.push_back(i);
    }
    parallel_stripes(n + 1, threads, [&](std::size_t k) {
        Ring acc{};
        for (std::size_t i : f_nonzero) {
            if (i > k) break;
            const Ring& gk = g[k - i];
            if (!gk.is_zero()) acc.add_product(f[i], gk);
        }
        out[k] = std::move(acc);
    });
    return out;
}

/// Product of a ring-valued series with a rational-valued one.
template <class Ring>
QSeries<Ring> series_mul_scalar(const QSeries<Ring>& f, const QSeries<Rational>& s, unsigned threads = 1) {
    const std::size_t n = std::min(f.truncation(), s.truncation());
    QSeries<Ring> out(n);
    std::vector<std::size_t> f_nonzero;
    for (std::size_t i = 0; i <= n; ++i) {
        if (!f[i].is_zero()) f_nonzero.push_back(i);
    }
    parallel_stripes(n + 1, threads, [&](std::size_t k) {
        Ring acc{};
        for (std::size_t i : f_nonzero) {
            if (i > k) break;
            const Rational& sk = s[k - i];
            if (!sk.is_zero()) ring_add_scaled(acc, f[i], sk);
        }
        out[k] = std::move(acc);
    });
    return out;
}

template <class Ring>
QSeries<Ring> operator*(const QSeries<Ring>& f, const QSeries<Ring>& g) {
    return series_mul(f, g);
}

/// f^k by binary exponentiation.
template <class Ring>
QSeries<Ring> series_pow(const QSeries<Ring>& f, unsigned k, unsigned threads = 1) {
    QSeries<Ring> result = QSeries<Ring>::one(f.truncation());
    QSeries<Ring> base = f;
    while (k != 0) {
        if (k & 1U) {
            result = series_mul(result, base, threads);
        }
        k >>= 1U;
        if (k != 0) {
            base = series_mul(base, base, threads);
        }
    }
    return result;
}

/// Multiplicative inverse; requires a unit constant term.
template <class Ring>
QSeries<Ring> series_inv(const QSeries<Ring>& f) {
    if (!ring_is_unit(f[0])) {
        throw std::domain_error("series_inv: constant coefficient is not a unit");
    }
    const std::size_t n = f.truncation();
    QSeries<Ring> g(n);
    const Ring inv0 = f[0].inverse();
    g[0] = inv0;
    for (std::size_t k = 1; k <= n; ++k) {
        Ring acc{};
        for (std::size_t j = 1; j <= k; ++j) {
            if (!f[j].is_zero() && !g[k - j].is_zero()) acc.add_product(f[j], g[k - j]);
        }
        g[k] = -(acc * inv0);
    }
    return g;
}

template <>
inline QSeries<Rational> series_inv(const QSeries<Rational>& f) {
    if (f[0].is_zero()) {
        throw std::domain_error("series_inv: constant coefficient is not a unit");
    }
    const std::size_t n = f.truncation();
    QSeries<Rational> g(n);
    const Rational inv0 = f[0].inverse();
    g[0] = inv0;
    for (std::size_t k = 1; k <= n; ++k) {
        Rational acc;
        for (std::size_t j = 1; j <= k; ++j) {
            if (!f[j].is_zero()) acc.add_product(f[j], g[k - j]);
        }
        g[k] = -(acc * inv0);
    }
    return g;
}

/// Factor count for pochhammer(); std::nullopt means an infinite product.
using FactorCount = std::optional<std::size_t>;
inline constexpr FactorCount kInfinite = std::nullopt;

/// Multiplies `acc` in place by (a q^offset; q^step)_count, i.e. by
/// prod_{j<count} (1 - a q^(offset + j*step)).
///
/// An infinite product needs offset >= 1 and step >= 1; factors of degree
/// beyond the truncation are skipped since they are 1 + O(q^(N+1)).
template <class Ring>
void pochhammer_into(QSeries<Ring>& acc, const Ring& a, std::size_t offset, std::size_t step, FactorCount count) {
    if (!count.has_value() && (offset == 0 || step == 0)) {
        throw std::domain_error("pochhammer: infinite product does not terminate under truncation");
    }
    const std::size_t n = acc.truncation();
    const std::size_t factors = count.value_or(n + 1);
    for (std::size_t j = 0; j < factors; ++j) {
        const std::size_t e = offset + j * step;
        if (e == 0) {
            acc = acc.scaled(Ring(1) - a);
            continue;
        }
        if (e > n) {
            break;
        }
        acc.multiply_binomial(a, e);
    }
}

/// (a q^offset; q^step)_count truncated at q^truncation.
template <class Ring>
QSeries<Ring> pochhammer(const Ring& a, std::size_t offset, std::size_t step, FactorCount count,
                         std::size_t truncation) {
    QSeries<Ring> acc = QSeries<Ring>::one(truncation);
    pochhammer_into(acc, a, offset, step, count);
    return acc;
}

}  // namespace hookdist
