#include "hookdist/genfun.hpp"

#include <json.hpp>

#include <string>

namespace hookdist {

HookVariable<CoeffPoly> symbolic_hook_variable() {
    return {CoeffPoly::monomial(Rational(1), 1), CoeffPoly::monomial(Rational(1), -1)};
}

HookVariable<Jet3> hook_variable_at_one() {
    return {Jet3(Rational(1), Rational(1), Rational(0)), Jet3(Rational(1), Rational(-1), Rational(1))};
}

HookVariable<Rational> hook_variable_at(const Rational& t0) {
    if (t0.sign() <= 0) {
        throw std::domain_error("hook_variable_at: T0 must be positive");
    }
    return {t0, t0.inverse()};
}

QSeries<Rational> self_conjugate_counts(std::size_t truncation) {
    return pochhammer(Rational(-1), 1, 2, kInfinite, truncation);
}

template <class Ring>
QSeries<Ring> hstar_series(std::size_t truncation, const HookVariable<Ring>& var) {
    const std::size_t n_max = truncation;
    QSeries<Ring> hstar(n_max);
    // 1 / ((q^2;q^2)_k (-q;q^2)_k), grown one k at a time
    QSeries<Rational> base = QSeries<Rational>::one(n_max);
    const Ring lead_first = Ring(1) - var.inverse;
    const Ring t_sq_minus_one = var.value * var.value - Ring(1);
    Ring power(1);

    auto accumulate = [&](const Ring& c, const QSeries<Rational>& d, std::size_t shift) {
        if (c.is_zero()) return;
        for (std::size_t i = shift; i <= n_max; ++i) {
            const Rational& di = d[i - shift];
            if (!di.is_zero()) ring_add_scaled(hstar[i], c, di);
        }
    };

    for (std::size_t k = 0; 2 * k * k - k <= n_max; ++k) {
        if (k > 0) {
            base.divide_binomial(Rational(1), 2 * k);
            base.divide_binomial(Rational(-1), 2 * k - 1);
        }
        if (power.is_zero()) {
            break;
        }
        accumulate(power * var.inverse, base, 2 * k * k - k);
        const std::size_t first_shift = 2 * k * k + k;
        if (first_shift <= n_max && !lead_first.is_zero()) {
            QSeries<Rational> with_extra = base;
            with_extra.divide_binomial(Rational(-1), 2 * k + 1);
            accumulate(power * lead_first, with_extra, first_shift);
        }
        power *= t_sq_minus_one;
    }
    return hstar;
}

namespace {

std::string where(int t, std::size_t n) {
    return "t=" + std::to_string(t) + ", n=" + std::to_string(n);
}

void check_assembled(const CoeffPoly& c, const Rational& sc_n, int t, std::size_t n) {
    if (!c.is_polynomial()) {
        throw InvariantViolation("negative power of T survived assembly (" + where(t, n) + ")");
    }
    if (!c.has_nonnegative_integer_coeffs()) {
        throw InvariantViolation("negative or non-integer coefficient in sc_t(n;T) (" + where(t, n) + ")");
    }
    if (c.evaluate(Rational(1)) != sc_n) {
        throw InvariantViolation("sc_t(n;1) differs from sc(n) (" + where(t, n) + ")");
    }
}

void check_assembled(const Jet3& c, const Rational& sc_n, int t, std::size_t n) {
    auto natural = [](const Rational& r) { return r.is_integer() && r.sign() >= 0; };
    if (c.a0 != sc_n) {
        throw InvariantViolation("jet constant term differs from sc(n) (" + where(t, n) + ")");
    }
    if (!natural(c.a1) || !natural(c.a2)) {
        throw InvariantViolation("jet derivatives are not non-negative integers (" + where(t, n) + ")");
    }
}

void check_assembled(const Rational& c, const Rational& sc_n, int t, std::size_t n) {
    if (c.sign() < 0) {
        throw InvariantViolation("negative value of sc_t(n;T0) at T0 > 0 (" + where(t, n) + ")");
    }
    if (sc_n.is_zero() && !c.is_zero()) {
        throw InvariantViolation("nonzero sc_t(n;T0) where sc(n) = 0 (" + where(t, n) + ")");
    }
}

}  // namespace

template <class Ring>
HookGenFun<Ring> build_genfun(int t, std::size_t truncation, const HookVariable<Ring>& var, unsigned threads) {
    if (t < 1) {
        throw std::invalid_argument("build_genfun: t must be positive");
    }
    const auto step = static_cast<std::size_t>(t);
    // Everything except (-q;q^2)_inf is a series in y = q^t.
    const std::size_t reduced = truncation / step;
    QSeries<Ring> in_y = (t % 2 == 1) ? hstar_series(reduced, var) : QSeries<Ring>::one(reduced);
    const Ring one_minus_t_sq = Ring(1) - var.value * var.value;
    for (int r = 0; r < t / 2; ++r) {
        // ((1-T^2) y^2; y^2)_inf
        pochhammer_into(in_y, one_minus_t_sq, 2, 2, kInfinite);
    }
    const QSeries<Rational> sc = self_conjugate_counts(truncation);

    HookGenFun<Ring> g;
    g.t = t;
    g.truncation = truncation;
    g.series = series_mul_scalar(in_y.dilated(step, truncation), sc, threads);
    for (std::size_t n = 0; n <= truncation; ++n) {
        check_assembled(g.series[n], sc[n], t, n);
    }
    return g;
}

template QSeries<CoeffPoly> hstar_series(std::size_t, const HookVariable<CoeffPoly>&);
template QSeries<Jet3> hstar_series(std::size_t, const HookVariable<Jet3>&);
template QSeries<Rational> hstar_series(std::size_t, const HookVariable<Rational>&);
template HookGenFun<CoeffPoly> build_genfun(int, std::size_t, const HookVariable<CoeffPoly>&, unsigned);
template HookGenFun<Jet3> build_genfun(int, std::size_t, const HookVariable<Jet3>&, unsigned);
template HookGenFun<Rational> build_genfun(int, std::size_t, const HookVariable<Rational>&, unsigned);

CoeffPoly sc_polynomial(const HookGenFun<CoeffPoly>& g, std::size_t n) {
    return g.coefficient(n);
}

Rational evaluate_sc(const HookGenFun<CoeffPoly>& g, std::size_t n, const Rational& t0) {
    return g.coefficient(n).evaluate(t0);
}

double evaluate_sc(const HookGenFun<CoeffPoly>& g, std::size_t n, double t0) {
    return static_cast<double>(g.coefficient(n).evaluate(Float128(t0)));
}

std::string sc_polynomial_to_json(int t, std::size_t n, const CoeffPoly& poly) {
    nlohmann::ordered_json j;
    j["t"] = t;
    j["n"] = n;
    auto coeffs = nlohmann::ordered_json::array();
    for (const auto& [m, c] : poly.terms()) {
        coeffs.push_back(nlohmann::ordered_json::array({m, c.to_string()}));
    }
    j["coeffs"] = std::move(coeffs);
    return j.dump();
}

ScPolynomialRecord sc_polynomial_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    ScPolynomialRecord rec;
    rec.t = j.at("t").get<int>();
    rec.n = j.at("n").get<std::size_t>();
    std::vector<std::pair<int, Rational>> terms;
    for (const auto& entry : j.at("coeffs")) {
        terms.emplace_back(entry.at(0).get<int>(), Rational::parse(entry.at(1).get<std::string>()));
    }
    rec.poly = CoeffPoly::from_terms(terms);
    return rec;
}

}  // namespace hookdist
