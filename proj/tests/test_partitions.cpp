#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hookdist/partitions.hpp"
#include "hookdist/genfun.hpp"

#include <algorithm>

using namespace hookdist;

namespace {

HookMultiset sorted_desc(HookMultiset h) {
    std::sort(h.begin(), h.end(), std::greater<>());
    return h;
}

}  // namespace

TEST_CASE("partition validation") {
    CHECK_THROWS_AS(Partition({2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({-1}), std::invalid_argument);
    const Partition p{5, 4, 2};
    CHECK(p.size() == 11);
    CHECK(p.length() == 3);
    CHECK(p.to_string() == "5,4,2");
    CHECK(Partition{}.to_string() == "()");
}

TEST_CASE("enumeration counts and order") {
    const auto six = enumerate_partitions(6);
    CHECK(six.size() == 11);
    CHECK(six.front() == Partition{6});
    CHECK(six.back() == Partition{1, 1, 1, 1, 1, 1});
    CHECK(std::is_sorted(six.begin(), six.end(), std::greater<>()));
    CHECK(enumerate_partitions(0) == std::vector<Partition>{Partition{}});
    // p(n) for n = 0..15
    const std::vector<std::size_t> p{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176};
    for (int n = 0; n < static_cast<int>(p.size()); ++n) {
        CHECK(enumerate_partitions(n).size() == p[static_cast<std::size_t>(n)]);
    }
    CHECK_THROWS_AS(enumerate_partitions(-1), std::invalid_argument);
}

TEST_CASE("self-conjugate enumeration") {
    CHECK(enumerate_self_conjugate(8) == std::vector<Partition>{{4, 2, 1, 1}, {3, 3, 2}});
    CHECK(enumerate_self_conjugate(2).empty());
    CHECK(enumerate_self_conjugate(0) == std::vector<Partition>{Partition{}});
    for (int n = 0; n <= 25; ++n) {
        std::vector<Partition> filtered;
        for (const Partition& p : enumerate_partitions(n)) {
            if (conjugate(p) == p) filtered.push_back(p);
        }
        CHECK_MESSAGE(enumerate_self_conjugate(n) == filtered, "n=" << n);
    }
}

TEST_CASE("self-conjugate counts match the distinct-odd-parts product") {
    const auto sc = self_conjugate_counts(40);
    for (int n = 0; n <= 40; ++n) {
        CHECK(Rational(static_cast<long>(enumerate_self_conjugate(n).size())) == sc[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("conjugate") {
    CHECK(conjugate(Partition{5, 4, 2}) == Partition{3, 3, 2, 2, 1});
    CHECK(conjugate(Partition{}) == Partition{});
    CHECK(conjugate(Partition{2, 2}) == Partition{2, 2});
    for (int n = 0; n <= 20; ++n) {
        for (const Partition& p : enumerate_partitions(n)) {
            REQUIRE(conjugate(conjugate(p)) == p);
        }
    }
}

TEST_CASE("hook numbers") {
    CHECK(hook_multiset(Partition{5, 4, 2}) == sorted_desc({7, 6, 4, 3, 1, 5, 4, 2, 1, 2, 1}));
    CHECK(hook_multiset(Partition{1}) == HookMultiset{1});
    CHECK(hook_multiset(Partition{2, 1}) == HookMultiset{3, 1, 1});
    CHECK(hook_multiset(Partition{}).empty());
    for (int n = 0; n <= 15; ++n) {
        for (const Partition& p : enumerate_partitions(n)) {
            REQUIRE(hook_multiset(p) == hook_multiset(conjugate(p)));
            REQUIRE(static_cast<int>(hook_multiset(p).size()) == n);
        }
    }
}

TEST_CASE("t-hook counts") {
    CHECK(count_t_hooks(Partition{2, 1}, 2) == 0);
    CHECK(count_t_hooks(Partition{2, 1}, 1) == 2);
    CHECK(count_t_hooks(Partition{}, 3) == 0);
    CHECK(count_t_hooks(Partition{5, 4, 2}, 4) == 2);
    CHECK_THROWS_AS(count_t_hooks(Partition{1}, 0), std::invalid_argument);
}

TEST_CASE("brute-force distributions") {
    const HookDistribution u = brute_distribution(2, 6, false);
    CHECK(u.counts == std::vector<BigInt>{1, 4, 6});
    CHECK(u.total == 11);
    const HookDistribution s = brute_distribution(1, 3, true);
    CHECK(s.counts == std::vector<BigInt>{0, 0, 1});
    CHECK(s.total == 1);
    const HookDistribution e = brute_distribution(5, 0, true);
    CHECK(e.counts == std::vector<BigInt>{1});
    // n = 2 has no self-conjugate partition
    CHECK(brute_distribution(2, 2, true).total == 0);
}

TEST_CASE("hook length formula") {
    CHECK(ftr_dimension(Partition{7}) == 1);
    CHECK(ftr_dimension(Partition{2, 1}) == 2);
    CHECK(ftr_dimension(Partition{5, 4, 2}) == 990);
    CHECK_THROWS(ftr_dimension(Partition{}));
    for (int n = 1; n <= 8; ++n) {
        BigInt sum = 0;
        for (const Partition& p : enumerate_partitions(n)) sum += ftr_dimension(p) * ftr_dimension(p);
        BigInt fact;
        mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
        CHECK_MESSAGE(sum == fact, "n=" << n);
    }
}

TEST_CASE("Nekrasov-Okounkov") {
    CHECK(nekrasov_okounkov_lhs(0) == CoeffPoly(1));
    CHECK(nekrasov_okounkov_lhs(1) == CoeffPoly::from_terms({{0, Rational(1)}, {1, Rational(-1)}}));
    for (int n = 0; n <= 8; ++n) {
        CHECK_MESSAGE(nekrasov_okounkov_lhs(n) == nekrasov_okounkov_rhs(n), "n=" << n);
    }
    // two partitions of 2 with hooks {2,1} and {2,1}: 2 (1 - z)(1 - z/4)
    CHECK(nekrasov_okounkov_lhs(2) ==
          CoeffPoly::from_terms({{0, Rational(2)}, {1, Rational(-5, 2)}, {2, Rational(1, 2)}}));
}
