#include "sdet/verify.hpp"

#include "sdet/realnonreal.hpp"
#include "sdet/znz.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace sdet {

namespace {

std::string describe(const ConditionList& feas, const std::vector<long>& counts, bool sign_digits) {
    std::ostringstream os;
    os << '[';
    for (std::size_t j = 0; j < feas.size(); ++j) {
        if (j) os << ", ";
        os << (sign_digits ? sign_string(feas.rows[j]) : znz_string(feas.rows[j])) << ':' << counts[j];
    }
    os << ']';
    return os.str();
}

bool same(const ConditionCounts& expected, const ConditionList& feas, const std::vector<long>& counts) {
    return expected.conditions.rows == feas.rows && expected.counts == counts;
}

std::size_t support(const ExponentVector& alpha) {
    return static_cast<std::size_t>(std::count_if(alpha.begin(), alpha.end(), [](auto e) { return e != 0; }));
}

}  // namespace

VerifyOutcome verify_instance(const Instance& inst, Backend backend) {
    auto fail = [](std::string msg) { return VerifyOutcome{false, std::move(msg)}; };
    const UniPoly p = build_instance(inst.roots);
    const OracleResult truth = direct_feasible(inst.roots, inst.system);
    const std::size_t s = inst.system.size();
    const std::size_t r = inst.roots.distinct_total();
    const std::size_t r_real = inst.roots.distinct_real();

    ZeroSetHandle znz_handle(p, backend);
    const ZnzResult znz = zero_nonzero_determination(znz_handle, inst.system);
    if (!same(truth.znz_all, znz.feas, znz.counts)) {
        return fail("zero-nonzero mismatch: got " + describe(znz.feas, znz.counts, false) + ", expected " +
                    describe(truth.znz_all.conditions, truth.znz_all.counts, false));
    }
    const QueryLedger& inv_ledger = znz_handle.ledger();
    if (inv_ledger.inv_calls() > 1 + s * r) {
        return fail("invertibility budget exceeded: " + std::to_string(inv_ledger.inv_calls()) + " > 1 + s r");
    }
    for (const auto& alpha : inv_ledger.invertibility_keys())
        if (support(alpha) > bit_length(r)) return fail("invertibility query with support above bit(r)");
    if (used_sets(znz.feas, s) != inv_ledger.used_subsets()) return fail("Used list differs from the one implied by Feas");

    ZeroSetHandle rn_handle(p, backend);
    const RealNonrealResult rn = real_nonreal_determination(rn_handle, inst.system);
    if (!same(truth.sign_real, rn.feas_real, rn.c_real)) {
        return fail("sign mismatch: got " + describe(rn.feas_real, rn.c_real, true) + ", expected " +
                    describe(truth.sign_real.conditions, truth.sign_real.counts, true));
    }
    if (!same(truth.znz_nonreal, rn.feas_nonreal, rn.c_nonreal)) {
        return fail("nonreal mismatch: got " + describe(rn.feas_nonreal, rn.c_nonreal, false) + ", expected " +
                    describe(truth.znz_nonreal.conditions, truth.znz_nonreal.counts, false));
    }
    for (long c : rn.c_nonreal)
        if (c % 2 != 0) return fail("odd nonreal cardinal");

    std::map<Row, long> balance;
    for (std::size_t j = 0; j < rn.feas_all.size(); ++j) balance[rn.feas_all.rows[j]] += rn.c_all[j];
    for (std::size_t j = 0; j < rn.feas_real.size(); ++j) balance[zero_pattern(rn.feas_real.rows[j])] -= rn.c_real[j];
    for (std::size_t j = 0; j < rn.feas_nonreal.size(); ++j) balance[rn.feas_nonreal.rows[j]] -= rn.c_nonreal[j];
    for (const auto& [row, b] : balance)
        if (b != 0) return fail("conservation fails at " + znz_string(row));

    const QueryLedger& ledger = rn_handle.ledger();
    if (ledger.taqu_calls() > 1 + 2 * s * r_real) {
        return fail("Tarski budget exceeded: " + std::to_string(ledger.taqu_calls()) + " > 1 + 2 s r");
    }
    if (ledger.inv_calls() > 1 + s * r) return fail("invertibility budget exceeded in real-nonreal run");
    for (const auto& alpha : ledger.tarski_keys())
        if (support(alpha) > bit_length(r_real)) return fail("Tarski query with support above bit(r)");
    return {};
}

}  // namespace sdet
