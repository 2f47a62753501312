#include "sdet/queries.hpp"

#include "sdet/symmatrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace sdet {

std::optional<long> QueryLedger::find_invertibility(const ExponentVector& alpha) const {
    if (auto it = inv_cache_.find(alpha); it != inv_cache_.end()) return it->second;
    return std::nullopt;
}

std::optional<long> QueryLedger::find_tarski(const ExponentVector& alpha) const {
    if (auto it = taqu_cache_.find(alpha); it != taqu_cache_.end()) return it->second;
    return std::nullopt;
}

void QueryLedger::record_invertibility(const ExponentVector& alpha, long value) {
    if (inv_cache_.emplace(alpha, value).second) inv_order_.push_back(alpha);
}

void QueryLedger::record_tarski(const ExponentVector& alpha, long value) {
    if (taqu_cache_.emplace(alpha, value).second) taqu_order_.push_back(alpha);
}

std::vector<std::vector<int>> QueryLedger::used_subsets() const {
    std::vector<std::vector<int>> out;
    out.reserve(inv_order_.size());
    for (const auto& alpha : inv_order_) {
        std::vector<int> subset;
        for (std::size_t k = 0; k < alpha.size(); ++k)
            if (alpha[k] != 0) subset.push_back(static_cast<int>(k) + 1);
        out.push_back(std::move(subset));
    }
    return out;
}

void QueryLedger::clear() { *this = QueryLedger{}; }

// ---------------------------------------------------------------------------

namespace {

struct SturmResult {
    long invertibility;
    long tarski;
};

// One primitive signed remainder sequence of (p, rem(p' q, p)) gives both
// queries: its last element is gcd(p, p' q) up to a constant.
SturmResult sturm_queries(const UniPoly& p, const UniPoly& dp, const UniPoly& q_reduced) {
    const UniPoly r = rem(dp * q_reduced, p);
    const auto seq = primitive_signed_remainder_sequence(p, r);
    const long gcd_degree = static_cast<long>(seq.back().size()) - 1;
    const auto var = sign_variations_at_infinity(std::span<const std::vector<Integer>>(seq));
    return {p.degree() - gcd_degree, var.at_minus_infinity - var.at_plus_infinity};
}

}  // namespace

long invertibility_query(const UniPoly& p, const UniPoly& q, Backend backend) {
    return ZeroSetHandle(p, backend).invertibility_query(q);
}

long tarski_query(const UniPoly& p, const UniPoly& q, Backend backend) {
    return ZeroSetHandle(p, backend).tarski_query(q);
}

ZeroSetHandle::ZeroSetHandle(const UniPoly& p, Backend backend) : backend_(backend) {
    if (p.is_zero()) throw std::invalid_argument("zero set of the zero polynomial is not finite");
    p_ = p.monic();
    dp_ = p_.derivative();
    if (backend_ == Backend::Hermite && p_.degree() >= 1) {
        newton_ = newton_sums(p_, 3 * static_cast<std::size_t>(p_.degree()) - 2);
    }
}

long ZeroSetHandle::query_reduced(const UniPoly& q_reduced, bool tarski) const {
    if (p_.degree() == 0) return 0;  // Z is empty
    if (backend_ == Backend::Sturm) {
        const auto res = sturm_queries(p_, dp_, q_reduced);
        return tarski ? res.tarski : res.invertibility;
    }
    const auto her = hermite_matrix_from_sums(newton_, static_cast<std::size_t>(p_.degree()), q_reduced);
    const auto rs = rank_and_signature(her);
    return tarski ? rs.signature : static_cast<long>(rs.rank);
}

long ZeroSetHandle::invertibility_query(const UniPoly& q) const { return query_reduced(rem(q, p_), false); }

long ZeroSetHandle::tarski_query(const UniPoly& q) const { return query_reduced(rem(q, p_), true); }

void ZeroSetHandle::bind(std::span<const UniPoly> plist) {
    if (system_) {
        if (!std::equal(plist.begin(), plist.end(), system_->begin(), system_->end())) {
            throw std::logic_error("ZeroSetHandle: product query against a different polynomial system");
        }
        return;
    }
    system_.emplace(plist.begin(), plist.end());
    system_reduced_.clear();
    for (const auto& q : plist) system_reduced_.push_back(rem(q, p_));
}

UniPoly ZeroSetHandle::reduced_product(std::span<const UniPoly> plist, const ExponentVector& alpha) {
    bind(plist);
    if (alpha.size() != plist.size()) throw std::invalid_argument("exponent vector length differs from system size");
    UniPoly acc = UniPoly::constant(1);
    for (std::size_t k = 0; k < alpha.size(); ++k) {
        if (alpha[k] > 2) throw std::invalid_argument("exponents must lie in {0,1,2}");
        for (unsigned e = 0; e < alpha[k]; ++e) acc = rem(acc * system_reduced_[k], p_);
    }
    return rem(acc, p_);
}

long ZeroSetHandle::invertibility_query_product(std::span<const UniPoly> plist, const ExponentVector& alpha) {
    if (auto hit = ledger_.find_invertibility(alpha)) return *hit;
    for (auto e : alpha)
        if (e > 1) throw std::invalid_argument("invertibility products take exponents in {0,1}");
    const long value = query_reduced(reduced_product(plist, alpha), false);
    ledger_.record_invertibility(alpha, value);
    return value;
}

long ZeroSetHandle::invertibility_query_product(std::span<const UniPoly> plist, std::span<const int> subset) {
    ExponentVector alpha(plist.size(), 0);
    for (int j : subset) {
        if (j < 1 || static_cast<std::size_t>(j) > plist.size()) throw std::out_of_range("subset index out of range");
        alpha[static_cast<std::size_t>(j - 1)] = 1;
    }
    return invertibility_query_product(plist, alpha);
}

long ZeroSetHandle::tarski_query_product(std::span<const UniPoly> plist, const ExponentVector& alpha) {
    if (auto hit = ledger_.find_tarski(alpha)) return *hit;
    const long value = query_reduced(reduced_product(plist, alpha), true);
    ledger_.record_tarski(alpha, value);
    return value;
}

}  // namespace sdet
