#pragma once

#include <cstddef>
#include <functional>

namespace hookdist {

/// Real dilogarithm Li_2(x) for x <= 1; throws std::domain_error for x > 1.
double dilog(double x);

/// Exponential growth constant of sc_t(n;T):
///   even t: (1/2) sqrt(pi^2/6 - Li_2(1-T^2))
///   odd t:  (1/2) sqrt(pi^2/6 - ((t-1)/t) Li_2(1-T^2))
double b_t(int t, double T);

/// Leading-order saddle point alpha = b_t(T) / sqrt(n), with z0 = exp(-alpha).
double saddle_alpha(int t, double T, int n);

/// Main term sqrt(b/(4 pi n^{3/2})) * exp(b (2 sqrt(n) - 1/sqrt(n))), b = b_t(T).
double sc_asymptotic(int t, double T, int n);

/// Constants of the limiting normal law for the t-hook count on
/// self-conjugate partitions of n.
struct AsymptoticParams {
    int t = 1;
    int delta_t = 1;  ///< 1 for odd t, 0 for even t
    double b1 = 0.0;  ///< b_t(1) = pi / (2 sqrt 6)
    int n_min = 1;    ///< smallest n with sigma2(n) > 0
    std::function<double(double)> mu;
    std::function<double(double)> sigma2;
};

AsymptoticParams asymptotic_params(int t);

struct MeanVariance {
    double mean = 0.0;
    double variance = 0.0;
};

/// mu_t(n) = sqrt(6n)/pi - t/2 + 3/pi^2 + delta_t/4,
/// sigma_t^2(n) = (pi^2-6) sqrt(6n)/pi^3 + 3(pi^2-12)/pi^4 - delta_t/8.
/// Throws std::domain_error for n below n_min(t).
MeanVariance mean_variance(int t, int n);

/// Taylor coefficients of x -> b_t(e^x) at x = 0 through second order.
struct TaylorCoeffs {
    double c0 = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
};

TaylorCoeffs bt_taylor_coeffs(int t);

/// Trapezoidal evaluation of the Cauchy integral
///   (1/2pi) int_{-pi}^{pi} (z0 e^{ix})^{-n} F_t(T; z0 e^{ix}) dx,  z0 = exp(-saddle_alpha),
/// with F_t evaluated from its product (and, for odd t, q-hypergeometric)
/// form in 113-bit floating point. Requires samples >= 8n.
double cauchy_estimate(int t, double T, int n, std::size_t samples, unsigned threads = 1);

}  // namespace hookdist
