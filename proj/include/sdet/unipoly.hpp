#pragma once

#include "sdet/rational.hpp"

#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace sdet {

/// Dense univariate polynomial over Q, ascending coefficients.
///
/// Canonical form has no trailing zero coefficient; the zero polynomial is
/// the empty sequence and reports degree -1 (standing in for -infinity).
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);
    UniPoly(std::initializer_list<Rational> coeffs);

    static UniPoly constant(const Rational& c);
    static UniPoly monomial(const Rational& c, int degree);
    /// X - a
    static UniPoly linear_root(const Rational& a);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    /// Coefficient of X^k, zero beyond the degree.
    Rational coeff(int k) const;
    const Rational& leading() const;
    bool is_monic() const { return !is_zero() && leading() == 1; }

    UniPoly monic() const;
    UniPoly derivative() const;
    Rational evaluate(const Rational& x) const;
    ComplexRational evaluate(const ComplexRational& x) const;

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& other);
    UniPoly& operator-=(const UniPoly& other);
    UniPoly& operator*=(const Rational& c);

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

private:
    void normalize();

    std::vector<Rational> coeffs_;
};

/// Euclidean division a = q*b + r with deg r < deg b.
/// Throws std::domain_error when b is the zero polynomial.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly rem(const UniPoly& a, const UniPoly& b);
UniPoly quo(const UniPoly& a, const UniPoly& b);

/// Monic gcd. Throws std::domain_error when both inputs are zero.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

UniPoly power(const UniPoly& p, unsigned e);

/// s0 = a, s1 = b, s_{k+1} = -rem(s_{k-1}, s_k), stopping at the last
/// nonzero element. Requires a != 0; a zero b yields [a].
std::vector<UniPoly> signed_remainder_sequence(const UniPoly& a, const UniPoly& b);

/// Same signs and degrees as signed_remainder_sequence, but each element is
/// scaled by a positive rational so that it has primitive integer
/// coefficients. This keeps coefficient growth at subresultant size and is
/// what the Sturm query backend runs on.
std::vector<std::vector<Integer>> primitive_signed_remainder_sequence(const UniPoly& a,
                                                                      const UniPoly& b);

/// Primitive integer polynomial that is a positive multiple of p.
std::vector<Integer> primitive_part(const UniPoly& p);

struct SignVariations {
    int at_minus_infinity = 0;
    int at_plus_infinity = 0;
    friend bool operator==(const SignVariations&, const SignVariations&) = default;
};

/// Sign variations of a sequence at -inf and +inf (leading coefficient
/// rule). Zero polynomials are skipped.
SignVariations sign_variations_at_infinity(std::span<const UniPoly> seq);
SignVariations sign_variations_at_infinity(std::span<const std::vector<Integer>> seq);

/// Number of strict sign changes in a coefficient sequence, zeros dropped.
int coefficient_sign_variations(std::span<const Rational> coeffs);

/// Power sums s_0..s_{count-1} of the roots of a monic p (with
/// multiplicity), by the Newton identities. Throws std::invalid_argument if
/// p is not monic of degree >= 1.
std::vector<Rational> newton_sums(const UniPoly& p, std::size_t count);

}  // namespace sdet
