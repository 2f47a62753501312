#pragma once

// Cross-check of the determination algorithms against the brute-force oracle
// on one constructed instance.

#include "sdet/oracle.hpp"
#include "sdet/queries.hpp"

#include <string>

namespace sdet {

struct VerifyOutcome {
    bool ok = true;
    std::string failure;  // first discrepancy, empty when ok
};

/// Runs zero-nonzero, sign and real-nonreal determination with the given
/// backend and compares with direct_feasible. Also checks that nonreal counts
/// are even, that counts are conserved between Z, Z_R and Z \ Z_R, the query
/// budgets 1 + s r (invertibility, r = #Z) and 1 + 2 s r (Tarski, r = #Z_R),
/// the bit(r) bound on the support of every queried exponent vector, and that
/// the ledger's Used list is the one implied by Feas.
VerifyOutcome verify_instance(const Instance& inst, Backend backend);

}  // namespace sdet
