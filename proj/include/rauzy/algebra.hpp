#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>

namespace rauzy {

// Root data for x^3 - a*x^2 + x - 1, a >= 2.  beta is the real root > 1,
// alpha the complex root with |alpha| < 1 and Im(alpha) > 0 (the third root
// is conj(alpha)).  The three roots multiply to 1, so |alpha|^2 * beta = 1.
struct RingParams {
    int a = 2;
    double beta = 0.0;
    std::complex<double> alpha;
    double abs_alpha = 0.0;
};

// Deterministic construction: bisection for beta on [1, a+1], alpha recovered
// from the deflated quadratic factor.  Throws std::invalid_argument for a < 2.
RingParams ring_new(int a);

enum class Root { alpha, beta };

// Element c0 + c1*alpha + c2*alpha^2 of Z[alpha], kept in canonical reduced
// form via alpha^3 = a*alpha^2 - alpha + 1.  Coefficients are 64-bit and all
// arithmetic is overflow-checked: operations throw std::overflow_error
// instead of wrapping.
struct CubicInt {
    std::int64_t c0 = 0;
    std::int64_t c1 = 0;
    std::int64_t c2 = 0;

    bool is_zero() const { return c0 == 0 && c1 == 0 && c2 == 0; }

    friend bool operator==(const CubicInt&, const CubicInt&) = default;
    // lexicographic on (c0, c1, c2); used only for deterministic ordering
    friend auto operator<=>(const CubicInt&, const CubicInt&) = default;
};

CubicInt operator+(const CubicInt& x, const CubicInt& y);
CubicInt operator-(const CubicInt& x, const CubicInt& y);
CubicInt operator-(const CubicInt& x);
CubicInt scale(std::int64_t k, const CubicInt& x);

// Exact product, reduced to canonical form.
CubicInt cubic_mul(const CubicInt& x, const CubicInt& y, int a);

// x * alpha and x * alpha^-1.  The inverse uses alpha^-1 = alpha^2 - a*alpha + 1,
// so both are exact ring operations (alpha is a unit).
CubicInt alpha_mul(const CubicInt& x, int a);
CubicInt alpha_inv_mul(const CubicInt& x, int a);

// alpha^n for n >= 0, by repeated multiplication.
CubicInt alpha_pow(int n, int a);

// Numeric value c0 + c1*root + c2*root^2; real (zero imaginary part) when
// root = beta.
std::complex<double> embed(const CubicInt& x, const RingParams& ring, Root root);

std::string to_string(const CubicInt& x);  // "(c0,c1,c2)"

struct CubicIntHash {
    std::size_t operator()(const CubicInt& x) const;
};

}  // namespace rauzy
