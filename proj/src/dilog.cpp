#include "hookdist/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hookdist {

namespace {

constexpr double kZeta2 = std::numbers::pi * std::numbers::pi / 6.0;

// Defining series, |x| <= 1/2.
double dilog_series(double x) {
    double sum = 0.0;
    double power = x;
    for (int k = 1; k < 200; ++k) {
        const double term = power / (static_cast<double>(k) * k);
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) {
            break;
        }
        power *= x;
    }
    return sum;
}

}  // namespace

double dilog(double x) {
    if (std::isnan(x) || x > 1.0) {
        throw std::domain_error("dilog: argument " + std::to_string(x) + " is outside (-inf, 1]");
    }
    if (x == 1.0) {
        return kZeta2;
    }
    if (x == 0.0) {
        return 0.0;
    }
    if (x < -1.0) {
        // inversion: Li2(x) + Li2(1/x) = -pi^2/6 - log^2(-x)/2
        const double l = std::log(-x);
        return -kZeta2 - 0.5 * l * l - dilog(1.0 / x);
    }
    if (x < -0.5) {
        // Landen: Li2(x) = -Li2(x/(x-1)) - log^2(1-x)/2, maps [-1,-1/2) into (1/3,1/2]
        const double l = std::log1p(-x);
        return -dilog_series(x / (x - 1.0)) - 0.5 * l * l;
    }
    if (x <= 0.5) {
        return dilog_series(x);
    }
    // reflection: Li2(x) + Li2(1-x) = pi^2/6 - log(x) log(1-x)
    return kZeta2 - std::log(x) * std::log1p(-x) - dilog_series(1.0 - x);
}

}  // namespace hookdist
