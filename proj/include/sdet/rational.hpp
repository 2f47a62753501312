#pragma once

// Exact scalars: arbitrary-precision integers and rationals (GMP), plus the
// Gaussian rationals used by the brute-force oracle.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace sdet {

using Integer = mpz_class;

/// Rationals are kept in lowest terms with a positive denominator; every
/// arithmetic result of mpq_class is canonical, constructors go through
/// make_rational / parse_rational.
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);

/// Parses "n" or "n/d" (optional leading sign, decimal digits only).
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// "num/den", with "/den" omitted when the denominator is 1.
std::string to_string(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

/// Bit length of n: bit(0) = 0, bit(1) = 1, bit(2) = bit(3) = 2, ...
constexpr unsigned bit_length(std::uint64_t n) {
    unsigned b = 0;
    while (n != 0) {
        ++b;
        n >>= 1;
    }
    return b;
}

struct ComplexRational {
    Rational re;
    Rational im;

    ComplexRational() = default;
    ComplexRational(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}

    ComplexRational conj() const { return {re, -im}; }
    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }

    friend ComplexRational operator+(const ComplexRational& a, const ComplexRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend ComplexRational operator-(const ComplexRational& a, const ComplexRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
        return a.re == b.re && a.im == b.im;
    }
};

}  // namespace sdet
