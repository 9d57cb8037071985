#include "hookdist/asymptotics.hpp"
#include "hookdist/coeff_poly.hpp"
#include "hookdist/parallel.hpp"

#include <boost/math/constants/constants.hpp>

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hookdist {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::cos;
using boost::multiprecision::exp;
using boost::multiprecision::sin;
using boost::multiprecision::sqrt;

struct Complex {
    Float128 re;
    Float128 im;

    Complex() = default;
    Complex(Float128 r, Float128 i = 0) : re(std::move(r)), im(std::move(i)) {}

    Complex& operator+=(const Complex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator*(const Complex& a, const Float128& s) { return {a.re * s, a.im * s}; }
    friend Complex operator/(const Complex& a, const Complex& b) {
        const Float128 d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
};

Float128 modulus(const Complex& z) {
    return sqrt(z.re * z.re + z.im * z.im);
}

Complex pow_int(Complex base, long exponent) {
    Complex result(1);
    while (exponent > 0) {
        if (exponent & 1L) result = result * base;
        exponent >>= 1;
        if (exponent > 0) base = base * base;
    }
    return result;
}

const Float128 kFactorTolerance("1e-18");
const Float128 kSeriesTolerance("1e-36");
constexpr int kMaxFactors = 10'000'000;

void require_inside_disk(const Complex& z) {
    if (modulus(z) >= 1) {
        throw std::domain_error("cauchy_estimate: product evaluation does not converge for |z| >= 1");
    }
}

// prod_{m>=0} (1 + z^{2m+1})
Complex self_conjugate_product(const Complex& z) {
    const Complex z2 = z * z;
    Complex power = z;
    Complex acc(1);
    for (int m = 0; m < kMaxFactors; ++m) {
        if (modulus(power) < kFactorTolerance) {
            return acc;
        }
        acc = acc * (Complex(1) + power);
        power = power * z2;
    }
    throw std::runtime_error("cauchy_estimate: self-conjugate product did not converge");
}

// prod_{j>=1} (1 - a w^j)
Complex pochhammer_tail(const Float128& a, const Complex& w) {
    if (a == 0) {
        return Complex(1);
    }
    Complex power = w * a;
    Complex acc(1);
    for (int j = 0; j < kMaxFactors; ++j) {
        if (modulus(power) < kFactorTolerance) {
            return acc;
        }
        acc = acc * (Complex(1) - power);
        power = power * w;
    }
    throw std::runtime_error("cauchy_estimate: hook product did not converge");
}

// H*(T; y) via its q-hypergeometric series.
Complex hstar_value(const Float128& T, const Complex& y) {
    const Float128 c = T * T - 1;
    const Float128 inv_t = Float128(1) / T;
    const Float128 lead_first = 1 - inv_t;
    if (c == 0) {
        // only k = 0 survives: (1 - 1/T)/(1 + y) + 1/T
        return Complex(lead_first) / (Complex(1) + y) + Complex(inv_t);
    }
    const Float128 ry = modulus(y);
    const Complex y2 = y * y;
    // base_k = c^k / ((y^2;y^2)_k (-y;y^2)_k), without the y-powers
    Complex base(1);
    Complex y_pow_2k(1);      // y^{2k}
    Complex y_pow_2km1 = y;   // y^{2k-1} for the next k
    Complex sum_first(0);
    Complex sum_second(0);
    for (int k = 0; k < kMaxFactors; ++k) {
        if (k > 0) {
            y_pow_2k = y_pow_2k * y2;
            base = base * c / ((Complex(1) - y_pow_2k) * (Complex(1) + y_pow_2km1));
            y_pow_2km1 = y_pow_2km1 * y2;
        }
        const long kk = k;
        const Complex second = base * pow_int(y, 2 * kk * kk - kk);
        const Complex first = base * pow_int(y, 2 * kk * kk + kk) / (Complex(1) + y_pow_2km1);
        sum_second += second;
        sum_first += first;
        // once the term ratio bound drops below 1/2 the tail is dominated by the current term
        const Float128 r4 = boost::multiprecision::pow(ry, 4 * kk + 1);
        const Float128 ratio_bound = abs(c) * r4 / ((1 - ry) * (1 - ry));
        const Float128 size = modulus(sum_first) + modulus(sum_second);
        if (k > 0 && ratio_bound < 0.5 && modulus(first) + modulus(second) < kSeriesTolerance * size) {
            return sum_first * lead_first + sum_second * inv_t;
        }
    }
    throw std::runtime_error("cauchy_estimate: hypergeometric series did not converge");
}

Complex integrand(int t, const Float128& T, int n, const Float128& alpha, const Float128& x) {
    const Float128 radius = exp(-alpha);
    const Complex z(radius * cos(x), radius * sin(x));
    require_inside_disk(z);
    Complex value = self_conjugate_product(z);
    const Complex y = pow_int(z, t);
    if (t % 2 == 1) {
        value = value * hstar_value(T, y);
    }
    const Complex hook_factor = pochhammer_tail(1 - T * T, y * y);
    value = value * pow_int(hook_factor, t / 2);
    // z^{-n} = exp(n alpha) e^{-inx}
    const Float128 scale = exp(alpha * n);
    const Float128 phase = -x * n;
    return value * Complex(scale * cos(phase), scale * sin(phase));
}

// Pairwise summation over a fixed index tree.
Complex pairwise_sum(std::span<const Complex> values) {
    if (values.size() <= 8) {
        Complex acc(0);
        for (const Complex& v : values) acc += v;
        return acc;
    }
    const std::size_t half = values.size() / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

}  // namespace

double cauchy_estimate(int t, double T, int n, std::size_t samples, unsigned threads) {
    if (n < 1) {
        throw std::invalid_argument("cauchy_estimate: n must be positive");
    }
    if (samples < 8 * static_cast<std::size_t>(n)) {
        throw std::invalid_argument("cauchy_estimate: need at least 8n samples, got " + std::to_string(samples));
    }
    const Float128 alpha = saddle_alpha(t, T, n);
    const Float128 t_value = T;
    const Float128 two_pi = boost::multiprecision::float128(2) * boost::math::constants::pi<Float128>();
    std::vector<Complex> values(samples);
    parallel_stripes(samples, threads, [&](std::size_t j) {
        const Float128 x = -boost::math::constants::pi<Float128>() + two_pi * Float128(j) / Float128(samples);
        values[j] = integrand(t, t_value, n, alpha, x);
    });
    const Complex total = pairwise_sum(values);
    return static_cast<double>(total.re / Float128(samples));
}

}  // namespace hookdist
