#include "hookdist/verify.hpp"

#include "hookdist/asymptotics.hpp"
#include "hookdist/genfun.hpp"
#include "hookdist/partitions.hpp"
#include "hookdist/stats.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

namespace hookdist {

Suite parse_suite(const std::string& name) {
    if (name == "oracle") return Suite::Oracle;
    if (name == "identities") return Suite::Identities;
    if (name == "asymptotics") return Suite::Asymptotics;
    if (name == "all") return Suite::All;
    throw std::invalid_argument("unknown suite '" + name + "' (expected oracle, identities, asymptotics or all)");
}

Rational exact_sc_value(int t, const Rational& t0, int n, unsigned threads) {
    if (n < 0) {
        throw std::invalid_argument("exact_sc_value: n must be non-negative");
    }
    const auto N = static_cast<std::size_t>(n);
    if (t0.is_one()) {
        return self_conjugate_counts(N)[N];
    }
    return build_genfun(t, N, hook_variable_at(t0), threads).coefficient(N);
}

double asymptotic_relative_error(int t, const Rational& t0, int n, unsigned threads) {
    const Rational exact = exact_sc_value(t, t0, n, threads);
    const double approx = sc_asymptotic(t, t0.to_double(), n);
    const double e = exact.to_double();
    return std::abs(approx - e) / e;
}

namespace {

constexpr std::uint64_t kSeed = 0x5C0FFEEULL;

class Report {
public:
    Report(std::string suite, std::vector<CheckResult>& out, const ProgressSink& progress)
        : suite_(std::move(suite)), out_(out), progress_(progress) {}

    void add(std::string name, bool passed, std::string detail = {}) {
        if (progress_) progress_(suite_ + ": " + name);
        out_.push_back({suite_, std::move(name), passed, std::move(detail)});
    }

    template <class Fn>
    void guarded(const std::string& name, Fn&& fn) {
        try {
            fn();
        } catch (const std::exception& e) {
            add(name, false, std::string("exception: ") + e.what());
        }
    }

private:
    std::string suite_;
    std::vector<CheckResult>& out_;
    const ProgressSink& progress_;
};

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

void oracle_suite(std::vector<CheckResult>& out, unsigned threads, const ProgressSink& progress) {
    Report r("oracle", out, progress);
    constexpr int kMaxN = 30;
    for (int t = 1; t <= 6; ++t) {
        const std::string name = "genfun equals brute force, t=" + std::to_string(t) + ", n<=30";
        r.guarded(name, [&] {
            const auto g = build_genfun(t, kMaxN, threads);
            int mismatch = -1;
            for (int n = 0; n <= kMaxN && mismatch < 0; ++n) {
                const CoeffPoly brute = brute_distribution(t, n, true).polynomial();
                if (!(sc_polynomial(g, static_cast<std::size_t>(n)) == brute)) mismatch = n;
            }
            r.add(name, mismatch < 0, mismatch < 0 ? "" : "first mismatch at n=" + std::to_string(mismatch));
        });
    }

    r.guarded("unrestricted 2-hooks of 6", [&] {
        const HookDistribution d = brute_distribution(2, 6, false);
        const bool ok = d.counts == std::vector<BigInt>{1, 4, 6} && d.total == 11;
        r.add("unrestricted 2-hooks of 6", ok, d.polynomial().to_string("T"));
    });
    r.guarded("hooks of (5,4,2)", [&] {
        const bool ok = hook_multiset(Partition{5, 4, 2}) == HookMultiset{7, 6, 5, 4, 4, 3, 2, 2, 1, 1, 1};
        r.add("hooks of (5,4,2)", ok);
    });

    std::mt19937_64 rng(kSeed);
    std::uniform_int_distribution<int> pick_t(1, 6);
    std::uniform_int_distribution<int> pick_n(3, 80);
    for (int sample = 0; sample < 8; ++sample) {
        const int t = pick_t(rng);
        const int n = pick_n(rng);
        const std::string name = "jets equal full moments, t=" + std::to_string(t) + ", n=" + std::to_string(n);
        r.guarded(name, [&] {
            const ExactMoments a = exact_moments(t, n, MomentMethod::Jets, threads);
            const ExactMoments b = exact_moments(t, n, MomentMethod::FullPolynomial, threads);
            r.add(name, a == b, "mean " + a.mean.to_string() + " vs " + b.mean.to_string());
        });
    }

    std::uniform_int_distribution<int> pick_num(1, 9);
    for (int sample = 0; sample < 4; ++sample) {
        const int t = pick_t(rng);
        const Rational t0(pick_num(rng), pick_num(rng));
        const std::string name = "rational ring equals symbolic evaluation, t=" + std::to_string(t) +
                                 ", T=" + t0.to_string() + ", n<=30";
        r.guarded(name, [&] {
            const auto symbolic = build_genfun(t, kMaxN, threads);
            const auto numeric = build_genfun(t, kMaxN, hook_variable_at(t0), threads);
            bool ok = true;
            for (std::size_t n = 0; n <= kMaxN; ++n) {
                ok = ok && evaluate_sc(symbolic, n, t0) == numeric.coefficient(n);
            }
            r.add(name, ok);
        });
    }
}

void identities_suite(std::vector<CheckResult>& out, const ProgressSink& progress) {
    Report r("identities", out, progress);
    for (int n = 0; n <= 8; ++n) {
        const std::string name = "Nekrasov-Okounkov, n=" + std::to_string(n);
        r.guarded(name, [&] { r.add(name, nekrasov_okounkov_lhs(n) == nekrasov_okounkov_rhs(n)); });
    }
    for (int n = 1; n <= 8; ++n) {
        const std::string name = "sum of squared dimensions is n!, n=" + std::to_string(n);
        r.guarded(name, [&] {
            BigInt sum = 0;
            for (const Partition& p : enumerate_partitions(n)) {
                const BigInt d = ftr_dimension(p);
                sum += d * d;
            }
            BigInt fact;
            mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
            r.add(name, sum == fact, sum.get_str());
        });
    }

    constexpr double kZeta2 = std::numbers::pi * std::numbers::pi / 6.0;
    r.add("Li2(1) = pi^2/6", std::abs(dilog(1.0) - kZeta2) < 1e-14);
    r.add("Li2(-1) = -pi^2/12", std::abs(dilog(-1.0) + kZeta2 / 2.0) < 1e-14);

    std::mt19937_64 rng(kSeed + 1);
    std::uniform_real_distribution<double> inside(-1.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const double z = inside(rng);
        worst = std::max(worst, std::abs(dilog(z) + dilog(-z) - dilog(z * z) / 2.0));
    }
    r.add("Li2(z) + Li2(-z) = Li2(z^2)/2 at 50 points", worst < 1e-10, "max deviation " + fmt(worst));

    std::uniform_real_distribution<double> span(-2.0, 0.9);
    constexpr double h = 1e-5;
    worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const double z = span(rng);
        const double fd = (dilog(z + h) - dilog(z - h)) / (2.0 * h);
        const double exact = std::abs(z) < 1e-12 ? 1.0 : -std::log1p(-z) / z;
        worst = std::max(worst, std::abs(fd - exact));
    }
    r.add("dLi2/dz = -log(1-z)/z at 20 points", worst < 1e-6, "max deviation " + fmt(worst));

    for (int t = 1; t <= 4; ++t) {
        constexpr double step = 1e-4;
        const TaylorCoeffs c = bt_taylor_coeffs(t);
        const double plus = b_t(t, std::exp(step));
        const double mid = b_t(t, 1.0);
        const double minus = b_t(t, std::exp(-step));
        const double d1 = (plus - minus) / (2.0 * step);
        const double d2 = (plus - 2.0 * mid + minus) / (step * step);
        const double dev = std::max({std::abs(mid - c.c0), std::abs(d1 - c.c1), std::abs(d2 - 2.0 * c.c2)});
        r.add("Taylor coefficients of b_t(e^x), t=" + std::to_string(t), dev < 1e-6, "max deviation " + fmt(dev));
    }
}

void asymptotics_suite(std::vector<CheckResult>& out, unsigned threads, const ProgressSink& progress) {
    Report r("asymptotics", out, progress);
    struct Point {
        int t;
        Rational T;
        int n;
    };
    for (const Point& p : {Point{2, Rational(1), 50}, Point{2, Rational(3, 2), 40}, Point{3, Rational(1), 30}}) {
        const std::string name = "Cauchy quadrature, t=" + std::to_string(p.t) + ", T=" + p.T.to_string() +
                                 ", n=" + std::to_string(p.n) + ", M=4096";
        r.guarded(name, [&] {
            const double exact = exact_sc_value(p.t, p.T, p.n, threads).to_double();
            const double est = cauchy_estimate(p.t, p.T.to_double(), p.n, 4096, threads);
            const double rel = std::abs(est - exact) / exact;
            r.add(name, rel < 1e-6, "relative error " + fmt(rel));
        });
    }
    for (const Point& p : {Point{2, Rational(1), 0}, Point{2, Rational(3, 2), 0}, Point{3, Rational(1), 0}}) {
        const std::string name =
            "coefficient asymptotic improves, t=" + std::to_string(p.t) + ", T=" + p.T.to_string() + ", n=200 -> 2000";
        r.guarded(name, [&] {
            const double e200 = asymptotic_relative_error(p.t, p.T, 200, threads);
            const double e2000 = asymptotic_relative_error(p.t, p.T, 2000, threads);
            r.add(name, e2000 < e200 && e2000 < 0.25,
                  "relative error " + fmt(e200) + " -> " + fmt(e2000) + " (need decrease and < 0.25)");
        });
    }
}

}  // namespace

std::vector<CheckResult> run_verification(Suite suite, unsigned threads, const ProgressSink& progress) {
    std::vector<CheckResult> out;
    if (suite == Suite::Oracle || suite == Suite::All) oracle_suite(out, threads, progress);
    if (suite == Suite::Identities || suite == Suite::All) identities_suite(out, progress);
    if (suite == Suite::Asymptotics || suite == Suite::All) asymptotics_suite(out, threads, progress);
    return out;
}

}  // namespace hookdist
