#pragma once

#include "hookdist/distribution.hpp"
#include "hookdist/genfun.hpp"
#include "hookdist/rational.hpp"

#include <string>
#include <vector>

namespace hookdist {

/// Exact hook distribution of sc_t(n;T), read off a symbolic generating function.
HookDistribution hook_distribution(const HookGenFun<CoeffPoly>& g, std::size_t n);
/// Builds the symbolic generating function to q^n and reads coefficient n.
HookDistribution hook_distribution(int t, int n, unsigned threads = 1);

struct ExactMoments {
    Rational mean;
    Rational variance;
    friend bool operator==(const ExactMoments&, const ExactMoments&) = default;
};

enum class MomentMethod { Jets, FullPolynomial };

/// Mean and variance from the full count vector. Throws std::domain_error
/// when the sample space is empty.
ExactMoments exact_moments(const HookDistribution& dist);
/// Mean and variance from the T = 1 + e jet of F_t: with F = a0 + a1 e + a2 e^2,
/// E[N] = a1/a0 and E[N(N-1)] = 2 a2/a0.
ExactMoments exact_moments(const HookGenFun<Jet3>& g, std::size_t n);
ExactMoments exact_moments(int t, int n, MomentMethod method, unsigned threads = 1);

/// (1/sc(n)) sum_m sc_t(n,m) exp((m - mu_t(n)) r / sigma_t(n)) with the
/// asymptotic mu_t, sigma_t.
double mgf(const HookDistribution& dist, double r);

struct ShapeDiagnostics {
    double skewness = 0.0;
    double excess_kurtosis = 0.0;
};

/// Third and fourth standardized central moments (minus 0 and 3), using the
/// distribution's own exact mean and variance. Throws std::domain_error for
/// a point mass.
ShapeDiagnostics standardized_moments(const HookDistribution& dist);

struct Figure2Row {
    int m = 0;
    double x = 0.0;  ///< (m - mean) / stddev
    double y = 0.0;  ///< count * stddev / (sc(n) * span)
};

/// gcd of the gaps between hook counts m that occur (2 for even t, since
/// off-diagonal hooks pair up under conjugation); 0 for a point mass.
int support_span(const HookDistribution& dist);

/// Renormalized coefficients for every m with a nonzero count. Dividing by
/// the support span makes y approximate the standard normal density at x,
/// with sum y * (span / stddev) = 1.
std::vector<Figure2Row> figure2_data(const HookDistribution& dist);

/// A value rounded half away from zero to a fixed number of decimals.
struct FixedDecimal {
    BigInt scaled;  ///< value * 10^places, rounded
    int places = 5;

    static FixedDecimal round(const Rational& value, int places);
    static FixedDecimal round(const Float128& value, int places);
    std::string to_string() const;
    friend bool operator==(const FixedDecimal&, const FixedDecimal&) = default;
};

struct Table1Row {
    int n = 0;
    Rational mean_exact;
    FixedDecimal mean_measured;    ///< mean number of 2-hooks over SC(n)
    FixedDecimal mean_asymptotic;  ///< sqrt(6n)/pi
    FixedDecimal ratio;
};

/// Mean number of 2-hooks against sqrt(6n)/pi for each n, via the jets method
/// (one generating function to max(nvals)). Throws std::invalid_argument for
/// an empty grid or n with sc(n) = 0.
std::vector<Table1Row> table1(const std::vector<int>& nvals, unsigned threads = 1);

}  // namespace hookdist
