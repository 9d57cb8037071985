#pragma once

#include "hookdist/coeff_poly.hpp"
#include "hookdist/jet.hpp"
#include "hookdist/qseries.hpp"
#include "hookdist/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hookdist {

/// Thrown when an assembled generating function breaks polynomiality,
/// integrality or normalization.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// The hook-marking variable T and its inverse, realized in a given ring:
/// symbolically (CoeffPoly), as T = 1 + e (Jet3) or at a rational point.
template <class Ring>
struct HookVariable {
    Ring value;
    Ring inverse;
};

HookVariable<CoeffPoly> symbolic_hook_variable();
HookVariable<Jet3> hook_variable_at_one();
/// Requires T0 > 0.
HookVariable<Rational> hook_variable_at(const Rational& t0);

/// Bivariate generating function sum_{lambda self-conjugate} T^{N_t(lambda)} q^{|lambda|},
/// truncated at q^truncation, with coefficients in `Ring`.
template <class Ring>
struct HookGenFun {
    int t = 1;
    std::size_t truncation = 0;
    QSeries<Ring> series{0};

    const Ring& coefficient(std::size_t n) const {
        if (n > truncation) {
            throw std::out_of_range("HookGenFun: n=" + std::to_string(n) + " exceeds truncation " +
                                    std::to_string(truncation));
        }
        return series[n];
    }
};

/// (-q; q^2)_inf: sc(n), the number of self-conjugate partitions of n.
QSeries<Rational> self_conjugate_counts(std::size_t truncation);

/// H*(T;q) from its q-hypergeometric representation
///   (1 - 1/T) sum_n (T^2-1)^n q^{2n^2+n} / ((q^2;q^2)_n (-q;q^2)_{n+1})
///   + (1/T)   sum_n (T^2-1)^n q^{2n^2-n} / ((q^2;q^2)_n (-q;q^2)_n),
/// taking every n with 2n^2 - n <= truncation.
template <class Ring>
QSeries<Ring> hstar_series(std::size_t truncation, const HookVariable<Ring>& var);

/// Even t: (-q;q^2)_inf * ((1-T^2) q^{2t}; q^{2t})_inf^{t/2}.
/// Odd t:  (-q;q^2)_inf * H*(T; q^t) * ((1-T^2) q^{2t}; q^{2t})_inf^{(t-1)/2}.
/// Throws InvariantViolation if an assembled coefficient is not a
/// polynomial in T with non-negative integer coefficients summing to sc(n).
template <class Ring>
HookGenFun<Ring> build_genfun(int t, std::size_t truncation, const HookVariable<Ring>& var, unsigned threads = 1);

inline HookGenFun<CoeffPoly> build_genfun(int t, std::size_t truncation, unsigned threads = 1) {
    return build_genfun(t, truncation, symbolic_hook_variable(), threads);
}

/// sc_t(n;T); the coefficient of T^m counts self-conjugate partitions of
/// n with exactly m hooks of length t.
CoeffPoly sc_polynomial(const HookGenFun<CoeffPoly>& g, std::size_t n);

/// Exact evaluation of sc_t(n;T0).
Rational evaluate_sc(const HookGenFun<CoeffPoly>& g, std::size_t n, const Rational& t0);
/// Evaluation at a floating point T0, carried out in 113-bit precision.
double evaluate_sc(const HookGenFun<CoeffPoly>& g, std::size_t n, double t0);

/// {"t":..,"n":..,"coeffs":[[m,"decimal"],...]} listing nonzero coefficients.
std::string sc_polynomial_to_json(int t, std::size_t n, const CoeffPoly& poly);
/// Inverse of sc_polynomial_to_json; returns (t, n, poly).
struct ScPolynomialRecord {
    int t = 0;
    std::size_t n = 0;
    CoeffPoly poly;
};
ScPolynomialRecord sc_polynomial_from_json(const std::string& text);

}  // namespace hookdist
