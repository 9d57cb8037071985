#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hookdist/csv.hpp"
#include "hookdist/partitions.hpp"
#include "hookdist/stats.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

using namespace hookdist;

namespace {

const HookDistribution& dist2(int n) {
    static std::map<int, HookDistribution> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, hook_distribution(2, n)).first;
    return it->second;
}

double normal_density(double x) {
    return std::exp(-x * x / 2.0) / std::sqrt(2.0 * std::numbers::pi);
}

double max_density_gap(const std::vector<Figure2Row>& rows) {
    double gap = 0.0;
    for (const auto& r : rows) gap = std::max(gap, std::abs(r.y - normal_density(r.x)));
    return gap;
}

}  // namespace

TEST_CASE("distribution from the generating function") {
    const HookDistribution d = hook_distribution(2, 8);
    CHECK(d == brute_distribution(2, 8, true));
    CHECK(d.total == 2);
    CHECK(hook_distribution(1, 0).counts == std::vector<BigInt>{1});
    CHECK_THROWS(hook_distribution(2, -1));
}

TEST_CASE("exact moments") {
    const ExactMoments m = exact_moments(1, 3, MomentMethod::FullPolynomial);
    CHECK(m.mean == Rational(2));
    CHECK(m.variance == Rational(0));
    CHECK(exact_moments(1, 3, MomentMethod::Jets) == m);
    CHECK_THROWS_AS(exact_moments(2, 2, MomentMethod::Jets), std::domain_error);
    CHECK_THROWS_AS(exact_moments(2, 2, MomentMethod::FullPolynomial), std::domain_error);
}

TEST_CASE("jets and full polynomial agree exactly") {
    for (int t = 1; t <= 4; ++t) {
        const auto full = build_genfun(t, 200);
        const auto jets = build_genfun(t, 200, hook_variable_at_one());
        for (std::size_t n = 0; n <= 200; n += (n < 30 ? 1 : 17)) {
            if (n == 2) continue;
            REQUIRE_MESSAGE(exact_moments(jets, n) == exact_moments(hook_distribution(full, n)), "t=" << t << " n=" << n);
        }
    }
}

TEST_CASE("mean at n = 100 agrees with enumeration") {
    Rational sum;
    long count = 0;
    for (const Partition& p : enumerate_self_conjugate(100)) {
        sum += Rational(count_t_hooks(p, 2));
        ++count;
    }
    CHECK(count == 2574);
    const Rational brute_mean = sum / Rational(count);
    CHECK(exact_moments(2, 100, MomentMethod::Jets).mean == brute_mean);
    CHECK(brute_mean.to_decimal(5) == "7.17483");
}

TEST_CASE("moment generating function") {
    CHECK(mgf(dist2(100), 0.0) == doctest::Approx(1.0).epsilon(1e-14));
    for (double r : {-1.0, 1.0}) {
        const double target = std::exp(r * r / 2.0);
        CHECK(std::abs(mgf(dist2(2500), r) - target) < std::abs(mgf(dist2(100), r) - target));
    }
    const double e = std::exp(1.0);
    CHECK(std::abs(mgf(dist2(2500), 1.0) * mgf(dist2(2500), -1.0) - e) <
          std::abs(mgf(dist2(100), 1.0) * mgf(dist2(100), -1.0) - e));
    CHECK_THROWS_AS(mgf(hook_distribution(2, 2), 1.0), std::domain_error);
}

TEST_CASE("standardized moments") {
    const auto small = standardized_moments(dist2(100));
    const auto large = standardized_moments(dist2(2500));
    CHECK(std::abs(large.skewness) < std::abs(small.skewness));
    CHECK(std::abs(large.excess_kurtosis) < std::abs(small.excess_kurtosis));
    CHECK_THROWS_AS(standardized_moments(hook_distribution(1, 3)), std::domain_error);

    // symmetric two-point law: skewness 0, excess kurtosis -2
    HookDistribution coin;
    coin.t = 1;
    coin.n = 0;
    coin.counts = {1, 0, 1};
    coin.total = 2;
    const auto s = standardized_moments(coin);
    CHECK(s.skewness == doctest::Approx(0.0));
    CHECK(s.excess_kurtosis == doctest::Approx(-2.0));
}

TEST_CASE("renormalized coefficient plot") {
    CHECK(support_span(dist2(400)) == 2);
    CHECK(support_span(hook_distribution(3, 60)) == 1);
    const auto rows = figure2_data(dist2(2500));
    const double sd = std::sqrt(exact_moments(dist2(2500)).variance.to_double());
    double riemann = 0.0;
    for (const auto& r : rows) riemann += r.y * 2.0 / sd;
    CHECK(riemann == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(max_density_gap(rows) < max_density_gap(figure2_data(dist2(400))));
    double peak = 0.0;
    for (const auto& r : rows) peak = std::max(peak, r.y);
    CHECK(std::abs(peak - 1.0 / std::sqrt(2.0 * std::numbers::pi)) < 0.2 / std::sqrt(2.0 * std::numbers::pi));
    CHECK_THROWS_AS(figure2_data(hook_distribution(1, 3)), std::domain_error);
}

TEST_CASE("fixed decimals") {
    CHECK(FixedDecimal::round(Rational(1, 3), 5).to_string() == "0.33333");
    CHECK(FixedDecimal::round(Rational(-123456789, 1000000), 5).to_string() == "-123.45679");
    CHECK(FixedDecimal::round(Rational(1, 200000), 5).to_string() == "0.00001");
    CHECK(FixedDecimal::round(Rational(-1, 200000), 5).to_string() == "-0.00001");
    CHECK(FixedDecimal::round(Float128(2.5), 0).to_string() == "3");
    CHECK(FixedDecimal::round(Float128("1.02380"), 5) == FixedDecimal::round(Rational(10238, 10000), 5));
}

TEST_CASE("mean 2-hook table rows") {
    const auto rows = table1({100, 500});
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].n == 100);
    CHECK(rows[0].mean_measured.to_string() == "7.17483");
    CHECK(rows[0].mean_asymptotic.to_string() == "7.79697");
    CHECK(rows[1].mean_asymptotic.to_string() == "17.43455");
    CHECK(rows[0].mean_exact == exact_moments(2, 100, MomentMethod::FullPolynomial).mean);
    CHECK_THROWS_AS(table1({}), std::invalid_argument);
    CHECK_THROWS_AS(table1({0}), std::invalid_argument);
    CHECK_THROWS_AS(table1({2}), std::invalid_argument);
}

TEST_CASE("CSV output") {
    CHECK(csv_escape("plain") == "plain");
    CHECK(csv_escape("a,b") == "\"a,b\"");
    CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(csv_escape("two\nlines") == "\"two\nlines\"");
    CHECK(format_double(0.5, 12) == "0.5");
    CHECK(format_double(-1.0 / 3.0, 4) == "-0.3333");
    CHECK_THROWS(format_double(1.0, 0));

    std::ostringstream t1;
    write_table1_csv(t1, table1({100}));
    CHECK(t1.str() == "n,mu_measured,mu_asymptotic,ratio\n100,7.17483,7.79697,0.92021\n");

    std::ostringstream f2;
    write_figure2_csv(f2, {{4, 0.5, 0.25}}, 6);
    CHECK(f2.str() == "m,x,y\n4,0.5,0.25\n");
}

TEST_CASE("atomic file write") {
    const auto dir = std::filesystem::temp_directory_path() / "hookdist_stats_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "out.csv";
    write_file_atomic(path, "first\n");
    write_file_atomic(path, "second\n");
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == "second\n");
    CHECK(std::distance(std::filesystem::directory_iterator(dir), std::filesystem::directory_iterator{}) == 1);
    CHECK_THROWS(write_file_atomic(dir / "missing" / "x.csv", "x"));
    std::filesystem::remove_all(dir);
}
