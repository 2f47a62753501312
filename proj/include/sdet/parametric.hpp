#pragma once

// Polynomials whose coefficients depend on parameters Y_1..Y_m, parametric
// Hermite matrices and the HElim family.

#include "sdet/queries.hpp"
#include "sdet/rational.hpp"
#include "sdet/realnonreal.hpp"
#include "sdet/unipoly.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace sdet {

/// Exponent vector of a monomial in Y_1..Y_m. Stored without trailing zeros
/// so that Y_1 has the same key whatever m is.
using Monomial = std::vector<unsigned>;

/// Sparse polynomial over Q in the parameters.
class ParamPoly {
public:
    ParamPoly() = default;
    ParamPoly(const Rational& c);  // NOLINT: constants convert implicitly
    ParamPoly(int c) : ParamPoly(Rational(c)) {}

    /// Y_{k+1} (0-based k).
    static ParamPoly variable(std::size_t k);
    static ParamPoly term(Monomial m, const Rational& c);

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Highest parameter index used + 1.
    std::size_t num_params() const;
    /// Throws std::invalid_argument if the point has too few coordinates.
    Rational evaluate(std::span<const Rational> point) const;

    ParamPoly operator-() const;
    ParamPoly& operator+=(const ParamPoly& o);
    ParamPoly& operator-=(const ParamPoly& o);
    friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
    friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);

    friend bool operator==(const ParamPoly&, const ParamPoly&) = default;
    /// Total order used to normalize output families.
    friend bool operator<(const ParamPoly& a, const ParamPoly& b);

private:
    void add_term(const Monomial& m, const Rational& c);
    std::map<Monomial, Rational> terms_;
};

/// Dense polynomial in X with ParamPoly coefficients, ascending, no trailing
/// zero coefficient.
class ParamUniPoly {
public:
    ParamUniPoly() = default;
    explicit ParamUniPoly(std::vector<ParamPoly> coeffs);
    /// Lifts a polynomial with constant coefficients.
    static ParamUniPoly from(const UniPoly& p);

    const std::vector<ParamPoly>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Leading coefficient in X is the constant 1.
    bool is_monic() const;
    std::size_t num_params() const;
    UniPoly specialize(std::span<const Rational> point) const;

    friend ParamUniPoly operator+(const ParamUniPoly& a, const ParamUniPoly& b);
    friend ParamUniPoly operator-(const ParamUniPoly& a, const ParamUniPoly& b);
    friend ParamUniPoly operator*(const ParamUniPoly& a, const ParamUniPoly& b);
    friend bool operator==(const ParamUniPoly&, const ParamUniPoly&) = default;

private:
    void trim();
    std::vector<ParamPoly> coeffs_;
};

/// a mod p for p monic in X. Throws std::invalid_argument otherwise.
ParamUniPoly rem_monic(const ParamUniPoly& a, const ParamUniPoly& p);

/// Newton sums s_0..s_{count-1} of a monic p (deg >= 1).
std::vector<ParamPoly> parametric_newton_sums(const ParamUniPoly& p, std::size_t count);

using ParamMatrix = std::vector<std::vector<ParamPoly>>;

/// Her(p, q) with parameter-polynomial entries. Throws std::invalid_argument
/// unless p is monic in X of degree >= 1.
ParamMatrix parametric_hermite(const ParamUniPoly& p, const ParamUniPoly& q);

/// Determinants of the leading k x k submatrices, k = 1..n.
std::vector<ParamPoly> leading_principal_minors(const ParamMatrix& m);

/// All alpha in {0,1,2}^s with at most bit(p) nonzero entries, lex order.
std::vector<ExponentVector> prod_family(std::size_t s, std::uint64_t p);

/// Union of the leading principal minors of Her(P, P^alpha) over
/// prod_family(s, p), deduplicated and sorted. p defaults to deg_X P.
/// Zero minors are kept.
std::vector<ParamPoly> helim(const ParamUniPoly& p, std::span<const ParamUniPoly> system,
                             std::optional<std::uint64_t> bound = std::nullopt);

struct InvarianceGroup {
    std::vector<int> signs;             // sign of each HElim member
    std::vector<std::size_t> samples;   // indices into the sample list
    RealNonrealResult output;           // output at the first sample
};

struct InvarianceViolation {
    std::size_t group;
    std::size_t sample;
};

struct InvarianceReport {
    std::vector<ParamPoly> family;
    std::vector<InvarianceGroup> groups;  // ordered by first sample
    std::vector<InvarianceViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// Groups the samples by their sign vector on HElim(P, system) and checks
/// that real-nonreal determination gives the same output within a group.
InvarianceReport invariance_check(const ParamUniPoly& p, std::span<const ParamUniPoly> system,
                                  std::span<const std::vector<Rational>> samples, Backend backend = Backend::Sturm);

}  // namespace sdet
