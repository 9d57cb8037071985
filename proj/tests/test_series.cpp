#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "generators.hpp"
#include "hookdist/partitions.hpp"

using namespace hookdist;
using testgen::Engine;

namespace {

QSeries<Rational> poly_series(std::vector<long> c, std::size_t truncation) {
    std::vector<Rational> r;
    for (long v : c) r.emplace_back(v);
    r.resize(truncation + 1);
    return QSeries<Rational>::from_coeffs(std::move(r), truncation);
}

CoeffPoly T() { return CoeffPoly::variable(); }

}  // namespace

TEST_CASE("rational basics") {
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational::parse("3/2") == Rational(3, 2));
    CHECK(Rational::parse("1.5") == Rational(3, 2));
    CHECK(Rational::parse("-0.0625") == Rational(-1, 16));
    CHECK(Rational::parse("0.920207") == Rational(920207, 1000000));
    CHECK(Rational::parse("12") == Rational(12));
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS(Rational(1, 0));
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(-7, 3).to_string() == "-7/3");
    CHECK(Rational(-1, 3) < Rational(0));
}

TEST_CASE("half-away-from-zero rounding") {
    CHECK(Rational(1, 8).to_decimal(2) == "0.13");
    CHECK(Rational(-1, 8).to_decimal(2) == "-0.13");
    CHECK(Rational(1, 3).to_decimal(5) == "0.33333");
    CHECK(Rational(2, 3).to_decimal(5) == "0.66667");
    CHECK(Rational(5, 2).to_decimal(0) == "3");
    CHECK(Rational(7).to_decimal(3) == "7.000");
}

TEST_CASE("laurent polynomial arithmetic") {
    const CoeffPoly p = T() + CoeffPoly(1);
    CHECK((p * p).to_string() == "1 + 2*T + T^2");
    CHECK((p - p).is_zero());
    CHECK(CoeffPoly::monomial(Rational(3), -2).min_exponent() == -2);
    CHECK(T().inverse() == CoeffPoly::monomial(Rational(1), -1));
    CHECK_THROWS(p.inverse());
    CHECK((p * p).evaluate(Rational(2)) == Rational(9));
    CHECK((p * p).derivative() == CoeffPoly::from_terms({{0, Rational(2)}, {1, Rational(2)}}));
    // no stored zeros: cancellation trims both ends
    const CoeffPoly q = T() * T() + T() - T() * T();
    CHECK(q == T());
    CHECK(q.term_count() == 1);
    CHECK((CoeffPoly(1) - T() + T()).max_exponent() == 0);
}

TEST_CASE("laurent polynomial ring laws") {
    Engine rng(101);
    for (int i = 0; i < 60; ++i) {
        const CoeffPoly a = testgen::laurent(rng), b = testgen::laurent(rng), c = testgen::laurent(rng);
        REQUIRE(a * b == b * a);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE((a + b) - b == a);
        CoeffPoly acc = c;
        acc.add_product(a, b);
        REQUIRE(acc == c + a * b);
    }
}

TEST_CASE("jet arithmetic") {
    Engine rng(202);
    for (int i = 0; i < 60; ++i) {
        const Jet3 a = testgen::jet(rng), b = testgen::jet(rng), c = testgen::jet(rng);
        REQUIRE(a * b == b * a);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        if (!a.a0.is_zero()) {
            REQUIRE(a * a.inverse() == Jet3(1));
        }
    }
    const Jet3 eps = Jet3::epsilon();
    CHECK(eps * eps * eps == Jet3(0));
    // (1 + e)^k: a1 = k, 2 a2 = k (k - 1)
    Jet3 power(1);
    for (int k = 1; k <= 10; ++k) {
        power = power * (Jet3(1) + eps);
        CHECK(power.a1 == Rational(k));
        CHECK(Rational(2) * power.a2 == Rational(k * (k - 1)));
    }
    CHECK_THROWS(Jet3(0, 1, 0).inverse());
}

TEST_CASE("series products") {
    const auto one_plus = poly_series({1, 1}, 5);
    const auto one_minus = poly_series({1, -1}, 5);
    CHECK(one_plus * one_minus == poly_series({1, 0, -1}, 5));
    CHECK(series_pow(one_plus, 2) == poly_series({1, 2, 1}, 5));
    CHECK(series_mul(poly_series({1, 1}, 3), poly_series({1, 1}, 7)).truncation() == 3);
    CHECK(series_pow(one_plus, 7).truncation() == 5);
    CHECK(series_pow(one_plus, 7)[5] == Rational(21));
}

TEST_CASE("series inverse") {
    CHECK(series_inv(poly_series({1, -1}, 6)) == poly_series({1, 1, 1, 1, 1, 1, 1}, 6));
    CHECK(series_inv(QSeries<Rational>::one(4)) == QSeries<Rational>::one(4));
    CHECK(series_inv(poly_series({1, 0, -1}, 6)) == poly_series({1, 0, 1, 0, 1, 0, 1}, 6));
    CHECK_THROWS(series_inv(poly_series({0, 1}, 3)));

    Engine rng(303);
    for (int i = 0; i < 100; ++i) {
        const std::size_t n = static_cast<std::size_t>(testgen::uniform_int(rng, 0, 12));
        auto f = testgen::series<Rational>(rng, n, [](Engine& r) { return testgen::rational(r); });
        f[0] = testgen::nonzero_rational(rng);
        const auto g = series_inv(f);
        REQUIRE(f * g == QSeries<Rational>::one(n));
        REQUIRE(g * f == QSeries<Rational>::one(n));
    }
    // generic path over Laurent coefficients with a monomial unit
    auto f = QSeries<CoeffPoly>::one(5);
    f[0] = T();
    f[2] = T() + CoeffPoly(3);
    CHECK(f * series_inv(f) == QSeries<CoeffPoly>::one(5));
}

TEST_CASE("series ring laws over polynomial and jet coefficients") {
    Engine rng(404);
    for (int i = 0; i < 20; ++i) {
        const std::size_t n = 6;
        auto gen = [](Engine& r) { return testgen::laurent(r, -1, 2); };
        const auto a = testgen::series<CoeffPoly>(rng, n, gen);
        const auto b = testgen::series<CoeffPoly>(rng, n, gen);
        const auto c = testgen::series<CoeffPoly>(rng, n, gen);
        REQUIRE(a * b == b * a);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        auto jgen = [](Engine& r) { return testgen::jet(r); };
        const auto x = testgen::series<Jet3>(rng, n, jgen);
        const auto y = testgen::series<Jet3>(rng, n, jgen);
        const auto z = testgen::series<Jet3>(rng, n, jgen);
        REQUIRE((x * y) * z == x * (y * z));
        REQUIRE(x * (y + z) == x * y + x * z);
    }
}

TEST_CASE("striped multiplication is independent of thread count") {
    Engine rng(505);
    auto gen = [](Engine& r) { return testgen::laurent(r, 0, 3); };
    const auto a = testgen::series<CoeffPoly>(rng, 40, gen);
    const auto b = testgen::series<CoeffPoly>(rng, 40, gen);
    const auto serial = series_mul(a, b, 1);
    CHECK(series_mul(a, b, 3) == serial);
    CHECK(series_mul(a, b, 8) == serial);
}

TEST_CASE("binomial updates agree with full products") {
    Engine rng(606);
    for (int i = 0; i < 30; ++i) {
        const std::size_t n = 15;
        auto f = testgen::series<Rational>(rng, n, [](Engine& r) { return testgen::rational(r); });
        const Rational a = testgen::rational(rng);
        const std::size_t e = static_cast<std::size_t>(testgen::uniform_int(rng, 1, 6));
        auto binomial = QSeries<Rational>::one(n);
        binomial[e] = -a;
        auto g = f;
        g.multiply_binomial(a, e);
        REQUIRE(g == f * binomial);
        g.divide_binomial(a, e);
        REQUIRE(g == f);
    }
}

TEST_CASE("dilation and shifts") {
    const auto f = poly_series({1, 2, 3}, 2);
    const auto d = f.dilated(3, 7);
    CHECK(d == poly_series({1, 0, 0, 2, 0, 0, 3, 0}, 7));
    CHECK(f.shifted(1) == poly_series({0, 1, 2}, 2));
    CHECK((poly_series({1, 1}, 3) + poly_series({1}, 1)).truncation() == 1);
}

TEST_CASE("q-Pochhammer products") {
    // (-q; q^2)_inf
    const auto sc = pochhammer(Rational(-1), 1, 2, kInfinite, 8);
    CHECK(sc == poly_series({1, 1, 0, 1, 1, 1, 1, 1, 2}, 8));
    CHECK(pochhammer(Rational(5), 1, 1, FactorCount{0}, 6) == QSeries<Rational>::one(6));
    // ((1 - T^2) q^4; q^4)_inf at N = 4
    const CoeffPoly a = CoeffPoly(1) - T() * T();
    const auto p = pochhammer(a, 4, 4, kInfinite, 4);
    auto expected = QSeries<CoeffPoly>::one(4);
    expected[4] = -a;
    CHECK(p == expected);
    // (q; q)_3 = (1 - q)(1 - q^2)(1 - q^3)
    CHECK(pochhammer(Rational(1), 1, 1, FactorCount{3}, 7) == poly_series({1, -1, -1, 0, 1, 1, -1, 0}, 7));
    CHECK_THROWS_AS(pochhammer(Rational(1), 0, 1, kInfinite, 4), std::domain_error);
    CHECK_THROWS_AS(pochhammer(Rational(1), 1, 0, kInfinite, 4), std::domain_error);
}

TEST_CASE("distinct odd parts") {
    const auto sc = pochhammer(Rational(-1), 1, 2, kInfinite, 60);
    for (int n = 0; n <= 60; ++n) {
        const Rational c = sc[static_cast<std::size_t>(n)];
        REQUIRE(c.is_integer());
        REQUIRE(c.sign() >= 0);
        if (n <= 40) {
            REQUIRE(c == Rational(static_cast<long>(enumerate_self_conjugate(n).size())));
        }
    }
    // distinct odd parts of 60, counted directly
    std::vector<BigInt> ways(61, 0);
    ways[0] = 1;
    for (int part = 1; part <= 60; part += 2) {
        for (int s = 60; s >= part; --s) ways[static_cast<std::size_t>(s)] += ways[static_cast<std::size_t>(s - part)];
    }
    for (int n = 0; n <= 60; ++n) {
        CHECK(sc[static_cast<std::size_t>(n)] == Rational(ways[static_cast<std::size_t>(n)]));
    }
}
