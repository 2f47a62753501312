#pragma once

// Sign determination on the real zero set Z_R from Tarski-queries. Same
// incremental skeleton as zero-nonzero determination, over the alphabet
// {0, +, -} (digits 0, 1, 2) with exponents in {0, 1, 2}; the linear
// systems are solved by plain exact elimination.

#include "sdet/conditions.hpp"
#include "sdet/queries.hpp"
#include "sdet/rational.hpp"

#include <span>
#include <vector>

namespace sdet {

struct BaseSignCounts {
    long zero = 0;
    long positive = 0;
    long negative = 0;
    friend bool operator==(const BaseSignCounts&, const BaseSignCounts&) = default;
};

/// Solves [[1,1,1],[0,1,-1],[0,1,1]] (c0, c+, c-) = (TaQu(1), TaQu(Q), TaQu(Q^2)).
/// Throws std::logic_error if the solution is not a nonnegative integer vector.
BaseSignCounts base_sign_solve(long taqu0, long taqu1, long taqu2);

/// Adapted exponent family of a sign condition list: Ada(Xi) u (Ada(Xi'), 1)
/// u (Ada(Xi''), 2), Xi' / Xi'' the restrictions with at least two / exactly
/// three extensions. Rows follow the order of sigma.
SubsetList adapted_exponents(const ConditionList& sigma);

/// Entry (a, j) = prod_i tau_j(i)^{alpha_a(i)} in {-1, 0, 1}, with 0^0 = 1.
IntMatrix sign_mat_of(const SubsetList& exponents, const ConditionList& sigma);

/// Exact solution of m x = v over Q. Throws std::invalid_argument if m is
/// singular or not square.
std::vector<Rational> solve_exact(const IntMatrix& m, std::span<const long> v);

struct SignResult {
    ConditionList feas;        // Feas_sign(P, Z_R), digits 0 / 1 / 2 for 0 / + / -
    std::vector<long> counts;  // c_sign(P, Z_R)
    SubsetList ada;            // adapted exponents of feas
};

SignResult sign_determination(ZeroSetHandle& handle, std::span<const UniPoly> system);

}  // namespace sdet
