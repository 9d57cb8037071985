#include "hookdist/partitions.hpp"

#include "hookdist/qseries.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace hookdist {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) {
            throw std::invalid_argument("Partition: parts must be positive");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
        size_ += parts_[i];
    }
}

std::string Partition::to_string() const {
    if (parts_.empty()) {
        return "()";
    }
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

namespace {

void check_size(int n) {
    if (n < 0) {
        throw std::invalid_argument("partition size must be non-negative");
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
    check_size(n);
    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(int, int)> recurse = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            recurse(remaining - p, p);
            current.pop_back();
        }
    };
    recurse(n, n);
    return out;
}

namespace {

// Stacks principal hooks with arm = leg = (p-1)/2 along the diagonal.
Partition from_distinct_odd_parts(const std::vector<int>& odd_parts) {
    const int d = static_cast<int>(odd_parts.size());
    if (d == 0) {
        return Partition();
    }
    const int rows = (odd_parts.front() + 1) / 2;
    std::vector<int> lambda(static_cast<std::size_t>(rows), 0);
    for (int i = 0; i < d; ++i) {
        const int arm = (odd_parts[static_cast<std::size_t>(i)] - 1) / 2;
        // row i gets the corner plus the arm
        lambda[static_cast<std::size_t>(i)] += arm + 1;
        // rows i+1..i+arm each get one cell from the leg
        for (int r = i + 1; r <= i + arm; ++r) {
            lambda[static_cast<std::size_t>(r)] += 1;
        }
    }
    while (!lambda.empty() && lambda.back() == 0) {
        lambda.pop_back();
    }
    return Partition(std::move(lambda));
}

}  // namespace

std::vector<Partition> enumerate_self_conjugate(int n) {
    check_size(n);
    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(int, int)> recurse = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.push_back(from_distinct_odd_parts(current));
            return;
        }
        int p = std::min(remaining, max_part);
        if (p % 2 == 0) --p;
        for (; p >= 1; p -= 2) {
            current.push_back(p);
            recurse(remaining - p, p - 2);
            current.pop_back();
        }
    };
    recurse(n, n);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

Partition conjugate(const Partition& lambda) {
    if (lambda.empty()) {
        return Partition();
    }
    std::vector<int> cols(static_cast<std::size_t>(lambda[0]), 0);
    for (int part : lambda.parts()) {
        for (int k = 0; k < part; ++k) {
            ++cols[static_cast<std::size_t>(k)];
        }
    }
    return Partition(std::move(cols));
}

HookMultiset hook_multiset(const Partition& lambda) {
    HookMultiset hooks;
    hooks.reserve(static_cast<std::size_t>(lambda.size()));
    const Partition conj = conjugate(lambda);
    for (int j = 0; j < lambda.length(); ++j) {
        for (int k = 0; k < lambda[static_cast<std::size_t>(j)]; ++k) {
            // 0-based form of (lambda_j - j) + (lambda'_k - k) + 1
            hooks.push_back((lambda[static_cast<std::size_t>(j)] - (j + 1)) +
                            (conj[static_cast<std::size_t>(k)] - (k + 1)) + 1);
        }
    }
    std::sort(hooks.begin(), hooks.end(), std::greater<>());
    return hooks;
}

int count_t_hooks(const Partition& lambda, int t) {
    if (t < 1) {
        throw std::invalid_argument("count_t_hooks: t must be positive");
    }
    const HookMultiset hooks = hook_multiset(lambda);
    return static_cast<int>(std::count(hooks.begin(), hooks.end(), t));
}

HookDistribution brute_distribution(int t, int n, bool self_conjugate_only) {
    if (t < 1) {
        throw std::invalid_argument("brute_distribution: t must be positive");
    }
    const std::vector<Partition> family =
        self_conjugate_only ? enumerate_self_conjugate(n) : enumerate_partitions(n);
    HookDistribution dist;
    dist.t = t;
    dist.n = n;
    for (const Partition& lambda : family) {
        const auto m = static_cast<std::size_t>(count_t_hooks(lambda, t));
        if (dist.counts.size() <= m) {
            dist.counts.resize(m + 1, BigInt(0));
        }
        dist.counts[m] += 1;
        dist.total += 1;
    }
    return dist;
}

BigInt ftr_dimension(const Partition& lambda) {
    if (lambda.size() < 1) {
        throw std::invalid_argument("ftr_dimension: partition must be nonempty");
    }
    BigInt factorial;
    mpz_fac_ui(factorial.get_mpz_t(), static_cast<unsigned long>(lambda.size()));
    BigInt product = 1;
    for (int h : hook_multiset(lambda)) {
        product *= h;
    }
    if (!mpz_divisible_p(factorial.get_mpz_t(), product.get_mpz_t())) {
        throw std::domain_error("ftr_dimension: n! not divisible by hook product for " + lambda.to_string());
    }
    BigInt out;
    mpz_divexact(out.get_mpz_t(), factorial.get_mpz_t(), product.get_mpz_t());
    return out;
}

CoeffPoly nekrasov_okounkov_lhs(int n) {
    check_size(n);
    CoeffPoly sum;
    const CoeffPoly z = CoeffPoly::variable();
    for (const Partition& lambda : enumerate_partitions(n)) {
        CoeffPoly term(1);
        for (int h : hook_multiset(lambda)) {
            term *= CoeffPoly(1) - z * Rational(BigInt(1), BigInt(h) * h);
        }
        sum += term;
    }
    return sum;
}

CoeffPoly nekrasov_okounkov_rhs(int n) {
    check_size(n);
    const auto trunc = static_cast<std::size_t>(n);
    const CoeffPoly z = CoeffPoly::variable();
    QSeries<CoeffPoly> product = QSeries<CoeffPoly>::one(trunc);
    for (std::size_t k = 1; k <= trunc; ++k) {
        // (1 - q^k)^(z-1) = sum_j binom(z-1, j) (-1)^j q^(kj)
        QSeries<CoeffPoly> factor(trunc);
        CoeffPoly binom(1);
        for (std::size_t j = 0; j * k <= trunc; ++j) {
            if (j > 0) {
                binom *= (z - CoeffPoly(static_cast<int>(j))) * Rational(BigInt(1), BigInt(static_cast<long>(j)));
            }
            factor[j * k] = (j % 2 == 0) ? binom : -binom;
        }
        product = series_mul(product, factor);
    }
    return product[trunc];
}

}  // namespace hookdist
