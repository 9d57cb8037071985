#include "hookdist/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hookdist {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kZeta2 = kPi * kPi / 6.0;

void require_positive_t(int t) {
    if (t < 1) {
        throw std::invalid_argument("hook length t must be positive, got " + std::to_string(t));
    }
}

}  // namespace

double b_t(int t, double T) {
    require_positive_t(t);
    if (!(T > 0.0)) {
        throw std::domain_error("b_t: T must be positive");
    }
    const double weight = (t % 2 == 0) ? 1.0 : static_cast<double>(t - 1) / t;
    const double radicand = kZeta2 - weight * dilog(1.0 - T * T);
    if (radicand < 0.0) {
        throw std::domain_error("b_t: negative radicand");
    }
    return 0.5 * std::sqrt(radicand);
}

double saddle_alpha(int t, double T, int n) {
    if (n < 1) {
        throw std::invalid_argument("saddle_alpha: n must be positive");
    }
    return b_t(t, T) / std::sqrt(static_cast<double>(n));
}

double sc_asymptotic(int t, double T, int n) {
    if (n < 1) {
        throw std::invalid_argument("sc_asymptotic: n must be positive");
    }
    const double b = b_t(t, T);
    const double root = std::sqrt(static_cast<double>(n));
    return std::sqrt(b / (4.0 * kPi * std::pow(static_cast<double>(n), 1.5))) * std::exp(b * (2.0 * root - 1.0 / root));
}

AsymptoticParams asymptotic_params(int t) {
    require_positive_t(t);
    AsymptoticParams p;
    p.t = t;
    p.delta_t = (t % 2 == 1) ? 1 : 0;
    p.b1 = b_t(t, 1.0);
    const double delta = p.delta_t;
    const double pi2 = kPi * kPi;
    p.mu = [t, delta, pi2](double n) {
        return std::sqrt(6.0 * n) / kPi - t / 2.0 + 3.0 / pi2 + delta / 4.0;
    };
    p.sigma2 = [delta, pi2](double n) {
        return (pi2 - 6.0) * std::sqrt(6.0 * n) / (pi2 * kPi) + 3.0 * (pi2 - 12.0) / (pi2 * pi2) - delta / 8.0;
    };
    // sigma2 is increasing in n, so the first positive value fixes the threshold.
    int n = 1;
    while (p.sigma2(n) <= 0.0) {
        ++n;
    }
    p.n_min = n;
    return p;
}

MeanVariance mean_variance(int t, int n) {
    const AsymptoticParams p = asymptotic_params(t);
    if (n < p.n_min) {
        throw std::domain_error("mean_variance: n=" + std::to_string(n) + " is below n_min=" +
                                std::to_string(p.n_min) + " where sigma_t^2(n) > 0");
    }
    return {p.mu(n), p.sigma2(n)};
}

TaylorCoeffs bt_taylor_coeffs(int t) {
    require_positive_t(t);
    const double s = std::sqrt(1.5);
    const double pi3 = kPi * kPi * kPi;
    TaylorCoeffs c;
    c.c0 = kPi / (2.0 * std::sqrt(6.0));
    if (t % 2 == 0) {
        c.c1 = s / kPi;
        c.c2 = s * (kPi * kPi - 6.0) / (2.0 * pi3);
    } else {
        const double td = t;
        c.c1 = s * (td - 1.0) / (kPi * td);
        c.c2 = s * (td - 1.0) * ((kPi * kPi - 6.0) * td + 6.0) / (2.0 * pi3 * td * td);
    }
    return c;
}

}  // namespace hookdist
