#pragma once

// Zero-nonzero determination on the complex zero set Z of a univariate
// polynomial, using invertibility-queries only.
//
// Row layout convention: for a condition list Sigma, the rows of Info(Sigma),
// the rows of Ada(Sigma) and the rows of Sigma share one ordering (the lex
// order of Sigma). Mat(Ada(Sigma), Sigma) is therefore indexed by Sigma
// positions on both axes, and the partition l0 / l1 / l* read off the last
// Info column splits rows and columns at once.

#include "sdet/conditions.hpp"
#include "sdet/queries.hpp"
#include "sdet/unipoly.hpp"

#include <span>
#include <vector>

namespace sdet {

/// Ada(Sigma) from the rows of Info(Sigma): the columns holding a 1.
SubsetList adapted_family(const ConditionList& sigma, const InfoMatrix& info);

struct Compression {
    std::vector<int> comp;  // comp(Sigma)
    ConditionList list;     // Comp(Sigma), same cardinality as Sigma
};

/// Throws std::invalid_argument for an empty list.
Compression compress(const ConditionList& sigma);

/// Entry (i, j) = sigma_j^{I_i}: 1 iff every index of the i-th subset is
/// nonzero in the j-th condition. The subsets' indices must belong to the
/// conditions' index set.
IntMatrix mat_of(const SubsetList& subsets, const ConditionList& sigma);

/// c = Mat(Ada(Sigma), Sigma)^{-1} v by recursion on the last Info column:
/// t(l) solves the Xi system, t(l1) = v(l1) - Mat((Ada(Xi'), i), Sigma*) t(l*),
/// c(l1) solves the Xi' system, c(l0) = t(l0) - c(l1), c(l*) = t(l*).
/// Throws std::invalid_argument on dimension mismatch.
std::vector<long> linear_solve(const ConditionList& sigma, const InfoMatrix& info, const IntMatrix& mat,
                               std::span<const long> v);

/// Per-iteration state of the determination loop.
struct ZnzState {
    ConditionList sigma;       // Feas(P_1..P_i, Z)
    std::vector<long> counts;  // c(P_1..P_i, Z)
    std::vector<int> comp;     // comp(sigma)
    InfoMatrix info;           // Info(Comp(sigma))
    SubsetList ada;            // Ada(sigma), over comp
    IntMatrix mat;             // Mat(ada, sigma)
};

enum class ZnzBranch { AlwaysNonzero, AlwaysZero, Split };

struct ZnzStep {
    int index = 0;
    long zero_count = 0;
    long nonzero_count = 0;
    ZnzBranch branch = ZnzBranch::Split;
    std::size_t card = 0;
    std::vector<int> comp;
};

struct ZnzResult {
    ConditionList feas;
    std::vector<long> counts;
    ZnzState state;
    std::vector<ZnzStep> trace;
};

/// Feas(P, Z) and c(P, Z). Queries go through (and are cached in) the
/// handle's ledger; distinct invertibility evaluations stay within 1 + s r.
ZnzResult zero_nonzero_determination(ZeroSetHandle& handle, std::span<const UniPoly> system);

/// Used(P, Z) rebuilt from Feas(P, Z) alone: [emptyset] first, then {i} when
/// P_i has a constant zero-nonzero value on Z, (Ada(Feas(P_1..P_{i-1})), i)
/// otherwise. For r = 0 only the query of 1 is made.
std::vector<std::vector<int>> used_sets(const ConditionList& feas, std::size_t s);

}  // namespace sdet
