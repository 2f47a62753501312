// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "sdet/oracle.hpp"
#include "sdet/parametric.hpp"
#include "sdet/realnonreal.hpp"
#include "sdet/signdet.hpp"
#include "sdet/symmatrix.hpp"
#include "sdet/znz.hpp"
#include "support.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <string>

using namespace sdet;
using testing::q;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::map<int, std::pair<bool, std::string>> results;

void report(int n, bool ok, const std::string& detail) { results[n] = {ok, detail}; }

std::vector<std::vector<int>> subsets_of(const SubsetList& a) {
    std::vector<std::vector<int>> out;
    for (std::size_t j = 0; j < a.size(); ++j) out.push_back(a.subset(j));
    return out;
}

std::size_t support(const ExponentVector& alpha) {
    return static_cast<std::size_t>(std::count_if(alpha.begin(), alpha.end(), [](auto e) { return e != 0; }));
}

bool same_list(const ConditionCounts& expected, const ConditionList& feas, const std::vector<long>& counts) {
    return expected.conditions.rows == feas.rows && expected.counts == counts;
}

// --- criterion 1 ---------------------------------------------------------

void five_condition_example() {
    constexpr InfoEntry Z = InfoEntry::Zero, O = InfoEntry::One, S = InfoEntry::Star;
    const ConditionList five = testing::znz_list({"10110", "10111", "11011", "11100", "11101"});
    const auto t0 = Clock::now();
    const Compression c = compress(five);
    const InfoMatrix info = get_info(five);
    const SubsetList ada = adapted_family(five, info);
    const double elapsed = seconds_since(t0);

    bool ok = c.comp == std::vector<int>{2, 3, 5};
    ok &= c.list.rows == testing::znz_list({"010", "011", "101", "110", "111"}).rows;
    ok &= info.rows == std::vector<std::vector<InfoEntry>>{
                           {S, Z, S, S, Z}, {S, Z, S, S, O}, {S, O, Z, S, S}, {S, S, O, S, Z}, {S, O, S, S, O}};
    ok &= subsets_of(ada) == std::vector<std::vector<int>>{{}, {5}, {2}, {3}, {2, 5}};
    ok &= elapsed < 1e-3;
    report(1, ok, "comp/Comp/Info/Ada exact, " + std::to_string(elapsed * 1e6) + " us");
}

// --- criteria 2, 3, 6, 7 -------------------------------------------------

struct RunOutput {
    ZnzResult znz;
    QueryLedger znz_ledger;
    SignResult sign;
    RealNonrealResult rn;
    QueryLedger rn_ledger;
};

RunOutput run_all(const UniPoly& p, const std::vector<UniPoly>& system, Backend b, double& znz_seconds,
                  double& other_seconds) {
    RunOutput out;
    auto t0 = Clock::now();
    ZeroSetHandle hz(p, b);
    out.znz = zero_nonzero_determination(hz, system);
    out.znz_ledger = hz.ledger();
    znz_seconds += seconds_since(t0);

    t0 = Clock::now();
    ZeroSetHandle hs(p, b);
    out.sign = sign_determination(hs, system);
    ZeroSetHandle hr(p, b);
    out.rn = real_nonreal_determination(hr, system);
    out.rn_ledger = hr.ledger();
    other_seconds += seconds_since(t0);
    return out;
}

bool same_values(const QueryLedger& a, const QueryLedger& b) {
    if (a.invertibility_keys() != b.invertibility_keys() || a.tarski_keys() != b.tarski_keys()) return false;
    for (const auto& k : a.invertibility_keys())
        if (a.find_invertibility(k) != b.find_invertibility(k)) return false;
    for (const auto& k : a.tarski_keys())
        if (a.find_tarski(k) != b.find_tarski(k)) return false;
    return true;
}

void oracle_criteria() {
    std::mt19937_64 rng(20240601);
    constexpr int kCases = 200;
    int bad2 = 0, bad3 = 0, bad6 = 0, bad7 = 0;
    double znz_seconds = 0, other_seconds = 0;
    std::size_t max_inv = 0, max_taqu = 0;

    for (int n = 0; n < kCases; ++n) {
        const Instance inst = random_instance(rng);
        const UniPoly p = build_instance(inst.roots);
        const OracleResult truth = direct_feasible(inst.roots, inst.system);
        const std::size_t s = inst.system.size();
        const std::size_t r = inst.roots.distinct_total();
        const std::size_t r_real = inst.roots.distinct_real();

        std::vector<RunOutput> runs;
        for (Backend b : {Backend::Sturm, Backend::Hermite}) runs.push_back(run_all(p, inst.system, b, znz_seconds, other_seconds));

        for (const RunOutput& o : runs) {
            if (!same_list(truth.znz_all, o.znz.feas, o.znz.counts)) ++bad2;

            bool ok3 = same_list(truth.sign_real, o.sign.feas, o.sign.counts);
            ok3 &= same_list(truth.sign_real, o.rn.feas_real, o.rn.c_real);
            ok3 &= same_list(truth.znz_nonreal, o.rn.feas_nonreal, o.rn.c_nonreal);
            for (long c : o.rn.c_nonreal) ok3 &= c % 2 == 0;
            std::map<Row, long> balance;
            for (std::size_t j = 0; j < o.znz.feas.size(); ++j) balance[o.znz.feas.rows[j]] += o.znz.counts[j];
            for (std::size_t j = 0; j < o.rn.feas_real.size(); ++j) balance[zero_pattern(o.rn.feas_real.rows[j])] -= o.rn.c_real[j];
            for (std::size_t j = 0; j < o.rn.feas_nonreal.size(); ++j) balance[o.rn.feas_nonreal.rows[j]] -= o.rn.c_nonreal[j];
            for (const auto& [row, v] : balance) ok3 &= v == 0;
            if (!ok3) ++bad3;

            bool ok6 = o.znz_ledger.inv_calls() <= 1 + s * r && o.rn_ledger.inv_calls() <= 1 + s * r;
            ok6 &= o.rn_ledger.taqu_calls() <= 1 + 2 * s * r;
            for (const QueryLedger* l : {&o.znz_ledger, &o.rn_ledger}) {
                for (const auto& k : l->invertibility_keys()) ok6 &= support(k) <= bit_length(r);
                for (const auto& k : l->tarski_keys()) ok6 &= support(k) <= bit_length(r);
            }
            ok6 &= used_sets(o.znz.feas, s) == o.znz_ledger.used_subsets();
            if (!ok6) ++bad6;
            max_inv = std::max(max_inv, o.znz_ledger.inv_calls());
            max_taqu = std::max(max_taqu, o.rn_ledger.taqu_calls());
            (void)r_real;
        }

        const RunOutput& a = runs[0];
        const RunOutput& b = runs[1];
        bool ok7 = a.znz.feas == b.znz.feas && a.znz.counts == b.znz.counts;
        ok7 &= a.sign.feas == b.sign.feas && a.sign.counts == b.sign.counts;
        ok7 &= a.rn.feas_real == b.rn.feas_real && a.rn.c_real == b.rn.c_real;
        ok7 &= a.rn.feas_nonreal == b.rn.feas_nonreal && a.rn.c_nonreal == b.rn.c_nonreal;
        ok7 &= same_values(a.znz_ledger, b.znz_ledger) && same_values(a.rn_ledger, b.rn_ledger);
        if (!ok7) ++bad7;
    }

    report(2, bad2 == 0 && znz_seconds < 30,
           std::to_string(kCases) + " instances x 2 backends, " + std::to_string(bad2) + " mismatches, " +
               std::to_string(znz_seconds) + " s");
    report(3, bad3 == 0,
           std::to_string(kCases) + " instances x 2 backends, " + std::to_string(bad3) + " failures, " +
               std::to_string(other_seconds) + " s");
    report(6, bad6 == 0,
           std::to_string(bad6) + " budget violations, max inv_calls " + std::to_string(max_inv) +
               ", max taqu_calls " + std::to_string(max_taqu));

    // rank(Her(P, Q)) = deg P - deg gcd(P, P'Q) on random pairs.
    std::mt19937_64 prng(77);
    std::uniform_int_distribution<int> deg(1, 12);
    int bad_rank = 0;
    for (int n = 0; n < 300; ++n) {
        UniPoly p = testing::random_poly(prng, deg(prng), 6);
        if (n % 3 == 0) p = p * power(testing::random_poly(prng, 1 + n % 3, 4), 2);
        const UniPoly f = testing::random_poly(prng, deg(prng), 6);
        const UniPoly pm = p.monic();
        const long rank = static_cast<long>(rank_and_signature(hermite_matrix(pm, f)).rank);
        if (rank != pm.degree() - gcd(pm, pm.derivative() * f).degree()) ++bad_rank;
    }
    report(7, bad7 == 0 && bad_rank == 0,
           std::to_string(bad7) + " backend disagreements, " + std::to_string(bad_rank) + "/300 rank mismatches");
}

// --- criteria 4, 5 -------------------------------------------------------

void solver_criteria() {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<long> val(-50, 50);
    int bad4 = 0, bad5 = 0;

    std::vector<ConditionList> lists{testing::znz_list({"00", "01", "10", "11"})};
    for (int n = 0; n < 500; ++n) lists.push_back(testing::random_list(rng, 1 + n % 12, 64, 2));

    for (const ConditionList& sigma : lists) {
        const InfoMatrix info = get_info(sigma);
        const SubsetList ada = adapted_family(sigma, info);
        const IntMatrix m = mat_of(ada, sigma);
        for (int rep = 0; rep < 3; ++rep) {
            std::vector<long> v(sigma.size());
            for (auto& x : v) x = val(rng);
            const auto c = linear_solve(sigma, info, m, v);
            const auto ref = testing::reference_solve(m, v);
            bool ok = ref.size() == c.size();
            for (std::size_t j = 0; ok && j < c.size(); ++j) ok = Rational(c[j]) == ref[j];
            if (!ok) ++bad4;
        }

        const auto members = subsets_of(ada);
        const std::set<std::vector<int>> member_set(members.begin(), members.end());
        bool ok5 = ada.size() == sigma.size() && member_set.size() == members.size();
        for (const auto& j : members) {
            ok5 &= j.size() < bit_length(sigma.size());
            for (std::size_t drop = 0; drop < j.size(); ++drop) {
                auto sub = j;
                sub.erase(sub.begin() + static_cast<long>(drop));
                ok5 &= member_set.count(sub) == 1;
            }
        }
        if (!ok5) ++bad5;
    }

    // The full 4x4 case against its closed form.
    const ConditionList full = lists.front();
    const InfoMatrix info = get_info(full);
    const std::vector<long> v{10, 6, 5, 3};  // Qu(1), Qu(P2), Qu(P1), Qu(P1 P2)
    const bool full_ok =
        linear_solve(full, info, mat_of(adapted_family(full, info), full), v) == std::vector<long>{2, 3, 2, 3};

    int bad_sub = 0;
    for (int n = 0; n < 100; ++n) {
        const ConditionList sigma = testing::random_list(rng, 2 + n % 11, 64, 2);
        const ConditionList sub = testing::random_sublist(rng, sigma);
        const auto big = subsets_of(adapted_family(sigma, get_info(sigma)));
        const auto small = subsets_of(adapted_family(sub, get_info(sub)));
        const std::set<std::vector<int>> bs(big.begin(), big.end());
        for (const auto& j : small)
            if (!bs.count(j)) {
                ++bad_sub;
                break;
            }
    }

    report(4, bad4 == 0 && full_ok,
           std::to_string(lists.size()) + " lists, " + std::to_string(bad4) + " solver mismatches, 4x4 case " +
               (full_ok ? "ok" : "wrong"));
    report(5, bad5 == 0 && bad_sub == 0,
           std::to_string(bad5) + " structural failures, " + std::to_string(bad_sub) + "/100 sublist failures");
}

// --- criterion 8 ---------------------------------------------------------

ParamPoly random_param_poly(std::mt19937_64& rng, std::size_t params) {
    std::uniform_int_distribution<long> c(-3, 3);
    ParamPoly out = c(rng);
    for (std::size_t k = 0; k < params; ++k) {
        out += ParamPoly::variable(k) * c(rng);
        if (rng() % 3 == 0) out += ParamPoly::variable(k) * ParamPoly::variable(k) * c(rng);
    }
    return out;
}

bool parametric_criterion(std::string& detail) {
    const ParamPoly y = ParamPoly::variable(0);
    const ParamUniPoly base(std::vector<ParamPoly>{-y, 0, 1});
    const std::vector<ParamUniPoly> just_x{ParamUniPoly(std::vector<ParamPoly>{0, 1})};
    std::vector<std::vector<Rational>> base_samples;
    for (long k = -4; k <= 6; ++k) base_samples.push_back({q(k, 2)});
    const InvarianceReport first = invariance_check(base, just_x, base_samples);
    bool ok = first.ok() && first.groups.size() == 3;  // y < 0, y = 0, y > 0

    std::mt19937_64 rng(808);
    std::uniform_int_distribution<long> num(-6, 6), den(1, 3);
    std::size_t shared = 0;
    int violations = 0;
    for (int n = 0; n < 20; ++n) {
        const std::size_t params = 1 + static_cast<std::size_t>(n % 2);
        const int d = 2 + n % 2;
        std::vector<ParamPoly> pc;
        for (int k = 0; k < d; ++k) pc.push_back(random_param_poly(rng, params));
        pc.push_back(1);
        std::vector<ParamUniPoly> system;
        for (int i = 0; i < 1 + n % 2; ++i) {
            std::vector<ParamPoly> fc;
            for (int k = 0; k < 2; ++k) fc.push_back(random_param_poly(rng, params));
            system.emplace_back(fc);
        }
        std::vector<std::vector<Rational>> samples;
        for (int k = 0; k < 16; ++k) {
            std::vector<Rational> pt;
            for (std::size_t j = 0; j < params; ++j) pt.push_back(q(num(rng), den(rng)));
            samples.push_back(pt);
        }
        const InvarianceReport rep = invariance_check(ParamUniPoly(pc), system, samples);
        violations += static_cast<int>(rep.violations.size());
        for (const auto& g : rep.groups) shared += g.samples.size() > 1;
    }
    ok &= violations == 0 && shared > 0;
    detail = "X^2 - Y " + std::string(first.ok() ? "ok" : "violated") + ", 20 random instances with " +
             std::to_string(violations) + " violations over " + std::to_string(shared) + " multi-sample groups";
    return ok;
}

bool smoke_benchmark(std::string& detail) {
    std::mt19937_64 rng(31337);
    // 30 rational roots times a random degree-20 factor.
    UniPoly p = testing::random_poly(rng, 20, 9);
    while (p.degree() != 20) p = testing::random_poly(rng, 20, 9);
    for (long k = 1; k <= 30; ++k) p = p * UniPoly::linear_root(q(k - 15, 1 + k % 3));
    std::vector<UniPoly> system;
    for (int i = 0; i < 20; ++i) system.push_back(testing::random_poly(rng, 1 + i % 6, 9));
    // Members sharing roots with P so that zeros show up.
    system[3] = UniPoly::linear_root(q(-14, 2)) * UniPoly::linear_root(q(1, 3));
    system[7] = UniPoly::linear_root(q(0)) * testing::random_poly(rng, 2, 5);
    system[12] = UniPoly::linear_root(q(5, 3)) * UniPoly::linear_root(q(10, 2));

    const auto t0 = Clock::now();
    ZeroSetHandle h(p);
    const RealNonrealResult r = real_nonreal_determination(h, system);
    const double elapsed = seconds_since(t0);
    long total = 0;
    for (long c : r.c_all) total += c;
    long real = 0;
    for (long c : r.c_real) real += c;
    const bool ok = elapsed < 60 && total == p.degree() - gcd(p, p.derivative()).degree() && real >= 30;
    detail = "smoke s=20 deg P=50 in " + std::to_string(elapsed) + " s, " + std::to_string(h.ledger().inv_calls()) +
             " Qu / " + std::to_string(h.ledger().taqu_calls()) + " TaQu, " +
             std::to_string(r.feas_real.size()) + " real sign conditions";
    return ok;
}

}  // namespace

int main() {
    five_condition_example();
    oracle_criteria();
    solver_criteria();
    std::string d1, d2;
    const bool inv = parametric_criterion(d1);
    const bool smoke = smoke_benchmark(d2);
    report(8, inv && smoke, d1 + "; " + d2);
    int failures = 0;
    for (const auto& [n, res] : results) {
        std::printf("criterion %d: %s  %s\n", n, res.first ? "PASS" : "FAIL", res.second.c_str());
        failures += !res.first;
    }
    return failures == 0 ? 0 : 1;
}
