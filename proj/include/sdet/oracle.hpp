#pragma once

// Brute-force ground truth: instances built from explicitly chosen roots, and
// conditions read off by evaluating every polynomial at every root.

#include "sdet/conditions.hpp"
#include "sdet/rational.hpp"
#include "sdet/unipoly.hpp"

#include <random>
#include <span>
#include <vector>

namespace sdet {

struct RealRoot {
    Rational value;
    unsigned multiplicity = 1;
};

/// The conjugate pair re +- i*im.
struct ComplexPair {
    Rational re;
    Rational im;
    unsigned multiplicity = 1;
};

struct RootSpec {
    std::vector<RealRoot> real;
    std::vector<ComplexPair> complex;

    std::size_t distinct_real() const { return real.size(); }
    std::size_t distinct_total() const { return real.size() + 2 * complex.size(); }
};

/// Throws std::invalid_argument on repeated roots, zero multiplicity or
/// im = 0.
void validate(const RootSpec& spec);

/// prod (X - a)^m * prod ((X - re)^2 + im^2)^m, monic.
UniPoly build_instance(const RootSpec& spec);

struct ConditionCounts {
    ConditionList conditions;
    std::vector<long> counts;
    friend bool operator==(const ConditionCounts&, const ConditionCounts&) = default;
};

struct OracleResult {
    ConditionCounts znz_all;      // Feas(P, Z)
    ConditionCounts znz_real;     // Feas(P, Z_R)
    ConditionCounts znz_nonreal;  // Feas(P, Z \ Z_R)
    ConditionCounts sign_real;    // Feas_sign(P, Z_R)
};

/// Evaluates each polynomial exactly at each distinct root (both members of
/// every conjugate pair).
OracleResult direct_feasible(const RootSpec& spec, std::span<const UniPoly> system);

struct Instance {
    RootSpec roots;
    std::vector<UniPoly> system;
};

struct GeneratorLimits {
    std::size_t max_distinct_roots = 8;
    unsigned max_multiplicity = 3;
    std::size_t max_system = 8;
    int max_degree = 6;
    long max_numerator = 1000;
};

/// Random instance within the limits. Polynomials of the system are mixed:
/// products of root factors (so that they vanish on chosen roots), products
/// of random linear factors (sign variety on the real roots), random dense
/// polynomials, constants, zero, and products of earlier members.
Instance random_instance(std::mt19937_64& rng, const GeneratorLimits& limits = {});

}  // namespace sdet
