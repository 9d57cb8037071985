#pragma once

#include "hookdist/coeff_poly.hpp"
#include "hookdist/rational.hpp"

#include <vector>

namespace hookdist {

/// Exact counts of partitions of n by their number m of t-hooks.
///
/// counts[m] is the coefficient of T^m in the hook polynomial; total is the
/// sum of all counts (sc(n) for the self-conjugate family).
struct HookDistribution {
    int t = 1;
    int n = 0;
    std::vector<BigInt> counts;
    BigInt total;

    /// Builds from a hook polynomial; rejects negative exponents and
    /// coefficients that are not non-negative integers.
    static HookDistribution from_polynomial(int t, int n, const CoeffPoly& poly);

    CoeffPoly polynomial() const;

    /// Highest m with a nonzero count, or -1 when empty.
    int max_hooks() const { return static_cast<int>(counts.size()) - 1; }

    friend bool operator==(const HookDistribution&, const HookDistribution&) = default;
};

}  // namespace hookdist
