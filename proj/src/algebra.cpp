#include "rauzy/algebra.hpp"

#include <cmath>
#include <stdexcept>

namespace rauzy {

namespace {

double cubic_value(int a, double x) {
    return ((x - a) * x + 1.0) * x - 1.0;
}

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r))
        throw std::overflow_error("CubicInt: addition overflow");
    return r;
}

std::int64_t checked_sub(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_sub_overflow(x, y, &r))
        throw std::overflow_error("CubicInt: subtraction overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r))
        throw std::overflow_error("CubicInt: multiplication overflow");
    return r;
}

}  // namespace

RingParams ring_new(int a) {
    if (a < 2) throw std::invalid_argument("ring_new: a must be >= 2");
    // p(1) = 1 - a < 0 and p(a+1) = (a+1)^2 + a > 0, so [1, a+1] brackets beta.
    double lo = 1.0, hi = a + 1.0;
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (cubic_value(a, mid) < 0.0 ? lo : hi) = mid;
    }
    double beta = 0.5 * (lo + hi);
    // x^3 - a x^2 + x - 1 = (x - beta)(x^2 + p x + q) with p = beta - a,
    // q = 1/beta; the quadratic has the conjugate complex pair.
    double p = beta - a;
    double q = 1.0 / beta;
    double im = std::sqrt(q - 0.25 * p * p);
    RingParams ring;
    ring.a = a;
    ring.beta = beta;
    ring.alpha = {-0.5 * p, im};
    ring.abs_alpha = 1.0 / std::sqrt(beta);
    return ring;
}

CubicInt operator+(const CubicInt& x, const CubicInt& y) {
    return {checked_add(x.c0, y.c0), checked_add(x.c1, y.c1), checked_add(x.c2, y.c2)};
}

CubicInt operator-(const CubicInt& x, const CubicInt& y) {
    return {checked_sub(x.c0, y.c0), checked_sub(x.c1, y.c1), checked_sub(x.c2, y.c2)};
}

CubicInt operator-(const CubicInt& x) {
    return {checked_sub(0, x.c0), checked_sub(0, x.c1), checked_sub(0, x.c2)};
}

CubicInt scale(std::int64_t k, const CubicInt& x) {
    return {checked_mul(k, x.c0), checked_mul(k, x.c1), checked_mul(k, x.c2)};
}

CubicInt cubic_mul(const CubicInt& x, const CubicInt& y, int a) {
    // convolution up to degree 4, then fold down with
    // alpha^k = a*alpha^{k-1} - alpha^{k-2} + alpha^{k-3}
    std::int64_t d0 = checked_mul(x.c0, y.c0);
    std::int64_t d1 = checked_add(checked_mul(x.c0, y.c1), checked_mul(x.c1, y.c0));
    std::int64_t d2 = checked_add(checked_add(checked_mul(x.c0, y.c2), checked_mul(x.c1, y.c1)),
                                  checked_mul(x.c2, y.c0));
    std::int64_t d3 = checked_add(checked_mul(x.c1, y.c2), checked_mul(x.c2, y.c1));
    std::int64_t d4 = checked_mul(x.c2, y.c2);
    d3 = checked_add(d3, checked_mul(d4, a));
    d2 = checked_sub(d2, d4);
    d1 = checked_add(d1, d4);
    d2 = checked_add(d2, checked_mul(d3, a));
    d1 = checked_sub(d1, d3);
    d0 = checked_add(d0, d3);
    return {d0, d1, d2};
}

CubicInt alpha_mul(const CubicInt& x, int a) {
    return {x.c2, checked_sub(x.c0, x.c2), checked_add(x.c1, checked_mul(x.c2, a))};
}

CubicInt alpha_inv_mul(const CubicInt& x, int a) {
    return {checked_add(x.c0, x.c1), checked_sub(x.c2, checked_mul(x.c0, a)), x.c0};
}

CubicInt alpha_pow(int n, int a) {
    if (n < 0) throw std::invalid_argument("alpha_pow: n must be >= 0");
    CubicInt r{1, 0, 0};
    for (int i = 0; i < n; ++i) r = alpha_mul(r, a);
    return r;
}

std::complex<double> embed(const CubicInt& x, const RingParams& ring, Root root) {
    std::complex<double> z = root == Root::alpha ? ring.alpha
                                                 : std::complex<double>(ring.beta, 0.0);
    std::complex<double> acc(static_cast<double>(x.c2), 0.0);
    acc = acc * z + static_cast<double>(x.c1);
    acc = acc * z + static_cast<double>(x.c0);
    return acc;
}

std::string to_string(const CubicInt& x) {
    return "(" + std::to_string(x.c0) + "," + std::to_string(x.c1) + "," +
           std::to_string(x.c2) + ")";
}

std::size_t CubicIntHash::operator()(const CubicInt& x) const {
    auto mix = [](std::size_t h, std::uint64_t v) {
        h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    };
    std::size_t h = 0;
    h = mix(h, static_cast<std::uint64_t>(x.c0));
    h = mix(h, static_cast<std::uint64_t>(x.c1));
    h = mix(h, static_cast<std::uint64_t>(x.c2));
    return h;
}

}  // namespace rauzy
