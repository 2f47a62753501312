#pragma once

#include "sdet/conditions.hpp"
#include "sdet/queries.hpp"
#include "sdet/signdet.hpp"
#include "sdet/znz.hpp"

#include <span>
#include <vector>

namespace sdet {

struct RealNonrealResult {
    ConditionList feas_real;  // sign conditions on Z_R
    std::vector<long> c_real;
    ConditionList feas_nonreal;  // zero-nonzero conditions on Z \ Z_R
    std::vector<long> c_nonreal;
    ConditionList feas_all;  // Feas(P, Z), kept for conservation checks
    std::vector<long> c_all;
};

/// Sign determination on Z_R, zero-nonzero determination on Z, then
/// c(sigma, Z \ Z_R) = c(sigma, Z) - sum of c_sign(tau, Z_R) over the tau
/// whose zero pattern is sigma. Both sub-runs share the handle's ledger.
/// Throws std::logic_error on a negative remainder or a real zero pattern
/// missing from Feas(P, Z).
RealNonrealResult real_nonreal_determination(ZeroSetHandle& handle, std::span<const UniPoly> system);

/// Zero pattern of a sign condition: 0 stays 0, + and - become 1.
Row zero_pattern(const Row& sign_row);

}  // namespace sdet
