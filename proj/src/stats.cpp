#include "hookdist/stats.hpp"

#include "hookdist/asymptotics.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hookdist {

HookDistribution hook_distribution(const HookGenFun<CoeffPoly>& g, std::size_t n) {
    return HookDistribution::from_polynomial(g.t, static_cast<int>(n), sc_polynomial(g, n));
}

HookDistribution hook_distribution(int t, int n, unsigned threads) {
    if (n < 0) {
        throw std::invalid_argument("hook_distribution: n must be non-negative");
    }
    const auto g = build_genfun(t, static_cast<std::size_t>(n), threads);
    return hook_distribution(g, static_cast<std::size_t>(n));
}

namespace {

void require_nonempty(const BigInt& total, int n) {
    if (sgn(total) == 0) {
        throw std::domain_error("empty sample space: no self-conjugate partitions of n=" + std::to_string(n));
    }
}

}  // namespace

ExactMoments exact_moments(const HookDistribution& dist) {
    require_nonempty(dist.total, dist.n);
    BigInt first = 0;
    BigInt second = 0;
    for (std::size_t m = 0; m < dist.counts.size(); ++m) {
        first += dist.counts[m] * m;
        second += dist.counts[m] * (m * m);
    }
    const Rational mean(first, dist.total);
    const Rational raw_second(second, dist.total);
    return {mean, raw_second - mean * mean};
}

ExactMoments exact_moments(const HookGenFun<Jet3>& g, std::size_t n) {
    const Jet3& jet = g.coefficient(n);
    require_nonempty(jet.a0.num(), static_cast<int>(n));
    const Rational mean = jet.a1 / jet.a0;
    const Rational falling = Rational(2) * jet.a2 / jet.a0;
    return {mean, falling + mean - mean * mean};
}

ExactMoments exact_moments(int t, int n, MomentMethod method, unsigned threads) {
    if (n < 0) {
        throw std::invalid_argument("exact_moments: n must be non-negative");
    }
    if (method == MomentMethod::Jets) {
        const auto g = build_genfun(t, static_cast<std::size_t>(n), hook_variable_at_one(), threads);
        return exact_moments(g, static_cast<std::size_t>(n));
    }
    return exact_moments(hook_distribution(t, n, threads));
}

double mgf(const HookDistribution& dist, double r) {
    require_nonempty(dist.total, dist.n);
    const MeanVariance mv = mean_variance(dist.t, dist.n);
    if (!(mv.variance > 0.0)) {
        throw std::domain_error("mgf: non-positive asymptotic variance");
    }
    const double sigma = std::sqrt(mv.variance);
    const double total = dist.total.get_d();
    double acc = 0.0;
    for (std::size_t m = 0; m < dist.counts.size(); ++m) {
        if (sgn(dist.counts[m]) == 0) continue;
        acc += dist.counts[m].get_d() / total * std::exp((static_cast<double>(m) - mv.mean) * r / sigma);
    }
    return acc;
}

namespace {

Rational central_moment(const HookDistribution& dist, const Rational& mean, unsigned k) {
    Rational acc;
    for (std::size_t m = 0; m < dist.counts.size(); ++m) {
        if (sgn(dist.counts[m]) == 0) continue;
        acc.add_product(Rational(dist.counts[m]), (Rational(static_cast<long>(m)) - mean).pow(k));
    }
    return acc / Rational(dist.total);
}

ExactMoments nondegenerate_moments(const HookDistribution& dist) {
    ExactMoments mom = exact_moments(dist);
    if (mom.variance.is_zero()) {
        throw std::domain_error("degenerate distribution: all partitions of n=" + std::to_string(dist.n) +
                                " have the same number of " + std::to_string(dist.t) + "-hooks");
    }
    return mom;
}

}  // namespace

ShapeDiagnostics standardized_moments(const HookDistribution& dist) {
    const ExactMoments mom = nondegenerate_moments(dist);
    const double var = mom.variance.to_double();
    const double mu3 = central_moment(dist, mom.mean, 3).to_double();
    const double mu4 = central_moment(dist, mom.mean, 4).to_double();
    return {mu3 / std::pow(var, 1.5), mu4 / (var * var) - 3.0};
}

int support_span(const HookDistribution& dist) {
    int first = -1;
    int span = 0;
    for (std::size_t m = 0; m < dist.counts.size(); ++m) {
        if (sgn(dist.counts[m]) == 0) continue;
        if (first < 0) {
            first = static_cast<int>(m);
        } else {
            span = std::gcd(span, static_cast<int>(m) - first);
        }
    }
    return span;
}

std::vector<Figure2Row> figure2_data(const HookDistribution& dist) {
    const ExactMoments mom = nondegenerate_moments(dist);
    const double mean = mom.mean.to_double();
    const double sd = std::sqrt(mom.variance.to_double());
    const double total = dist.total.get_d();
    const double span = support_span(dist);
    std::vector<Figure2Row> rows;
    for (std::size_t m = 0; m < dist.counts.size(); ++m) {
        if (sgn(dist.counts[m]) == 0) continue;
        rows.push_back({static_cast<int>(m), (static_cast<double>(m) - mean) / sd,
                        dist.counts[m].get_d() * sd / (total * span)});
    }
    return rows;
}

FixedDecimal FixedDecimal::round(const Rational& value, int places) {
    return {round_half_away_scaled(value, places), places};
}

FixedDecimal FixedDecimal::round(const Float128& value, int places) {
    // 36 significant digits is exact enough that only true ties could differ
    std::ostringstream os;
    os.precision(36);
    os << std::fixed << value;
    return round(Rational::parse(os.str()), places);
}

std::string FixedDecimal::to_string() const {
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
    return Rational(scaled, scale).to_decimal(places);
}

std::vector<Table1Row> table1(const std::vector<int>& nvals, unsigned threads) {
    if (nvals.empty()) {
        throw std::invalid_argument("table1: empty list of n values");
    }
    for (int n : nvals) {
        if (n < 1) {
            throw std::invalid_argument("table1: n must be positive, got " + std::to_string(n));
        }
    }
    const int n_max = *std::max_element(nvals.begin(), nvals.end());
    const auto g = build_genfun(2, static_cast<std::size_t>(n_max), hook_variable_at_one(), threads);
    const Float128 pi = boost::math::constants::pi<Float128>();
    std::vector<Table1Row> rows;
    for (int n : nvals) {
        if (g.coefficient(static_cast<std::size_t>(n)).a0.is_zero()) {
            throw std::invalid_argument("table1: mean undefined at n=" + std::to_string(n) + " (sc(n) = 0)");
        }
        Table1Row row;
        row.n = n;
        row.mean_exact = exact_moments(g, static_cast<std::size_t>(n)).mean;
        const Float128 mu = boost::multiprecision::sqrt(Float128(6 * n)) / pi;
        const Float128 measured = Float128(row.mean_exact.num().get_str()) / Float128(row.mean_exact.den().get_str());
        row.mean_measured = FixedDecimal::round(row.mean_exact, 5);
        row.mean_asymptotic = FixedDecimal::round(mu, 5);
        row.ratio = FixedDecimal::round(Float128(measured / mu), 5);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace hookdist
