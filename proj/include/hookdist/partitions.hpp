#pragma once

#include "hookdist/coeff_poly.hpp"
#include "hookdist/distribution.hpp"
#include "hookdist/rational.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace hookdist {

/// Integer partition stored as weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int operator[](std::size_t i) const { return parts_[i]; }

    /// "5,4,2"; the empty partition renders as "()".
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Hook lengths of every cell, sorted in decreasing order.
using HookMultiset = std::vector<int>;

/// All partitions of n, lexicographically decreasing: (n), (n-1,1), ...
std::vector<Partition> enumerate_partitions(int n);

/// Self-conjugate partitions of n, built from partitions of n into
/// distinct odd parts (each odd part 2k+1 is a principal hook with arm and
/// leg k). Lexicographically decreasing.
std::vector<Partition> enumerate_self_conjugate(int n);

Partition conjugate(const Partition& lambda);

/// h(j,k) = (lambda_j - j) + (lambda'_k - k) + 1 for every cell.
HookMultiset hook_multiset(const Partition& lambda);

int count_t_hooks(const Partition& lambda, int t);

/// Counts of partitions of n (optionally only self-conjugate ones) by
/// their number of t-hooks, by direct enumeration.
HookDistribution brute_distribution(int t, int n, bool self_conjugate_only);

/// n! / prod of hooks. Throws std::domain_error if the division is inexact.
BigInt ftr_dimension(const Partition& lambda);

/// sum over partitions of n of prod_{h} (1 - z/h^2), as a polynomial in z.
CoeffPoly nekrasov_okounkov_lhs(int n);

/// Coefficient of q^n in prod_{k>=1} (1 - q^k)^(z-1), as a polynomial in z.
CoeffPoly nekrasov_okounkov_rhs(int n);

}  // namespace hookdist
