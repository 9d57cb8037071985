#include "hookdist/distribution.hpp"

#include <stdexcept>
#include <string>

namespace hookdist {

HookDistribution HookDistribution::from_polynomial(int t, int n, const CoeffPoly& poly) {
    if (!poly.is_polynomial() || !poly.has_nonnegative_integer_coeffs()) {
        throw std::domain_error("HookDistribution: sc_" + std::to_string(t) + "(" + std::to_string(n) +
                                ";T) is not a polynomial with non-negative integer coefficients");
    }
    HookDistribution dist;
    dist.t = t;
    dist.n = n;
    if (poly.is_zero()) {
        return dist;
    }
    dist.counts.assign(static_cast<std::size_t>(poly.max_exponent()) + 1, BigInt(0));
    for (const auto& [m, c] : poly.terms()) {
        dist.counts[static_cast<std::size_t>(m)] = c.num();
        dist.total += c.num();
    }
    return dist;
}

CoeffPoly HookDistribution::polynomial() const {
    CoeffPoly p;
    for (std::size_t m = 0; m < counts.size(); ++m) {
        p += CoeffPoly::monomial(Rational(counts[m]), static_cast<int>(m));
    }
    return p;
}

}  // namespace hookdist
