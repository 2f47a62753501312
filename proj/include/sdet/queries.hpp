#pragma once

// Invertibility- and Tarski-query blackboxes for the zero set of a univariate
// polynomial, with the per-run cache that records which products were asked.

#include "sdet/rational.hpp"
#include "sdet/unipoly.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace sdet {

enum class Backend { Sturm, Hermite };

/// alpha in {0,1,2}^s, position k standing for P_{k+1}.
using ExponentVector = std::vector<std::uint8_t>;

/// Per-run query cache. Counters only move on a cache miss.
class QueryLedger {
public:
    std::optional<long> find_invertibility(const ExponentVector& alpha) const;
    std::optional<long> find_tarski(const ExponentVector& alpha) const;
    void record_invertibility(const ExponentVector& alpha, long value);
    void record_tarski(const ExponentVector& alpha, long value);

    std::size_t inv_calls() const { return inv_order_.size(); }
    std::size_t taqu_calls() const { return taqu_order_.size(); }

    /// Exponent vectors in the order they were first evaluated.
    const std::vector<ExponentVector>& invertibility_keys() const { return inv_order_; }
    const std::vector<ExponentVector>& tarski_keys() const { return taqu_order_; }

    /// Invertibility keys as 1-based index subsets: the Used list.
    std::vector<std::vector<int>> used_subsets() const;

    void clear();

private:
    std::map<ExponentVector, long> inv_cache_;
    std::map<ExponentVector, long> taqu_cache_;
    std::vector<ExponentVector> inv_order_;
    std::vector<ExponentVector> taqu_order_;
};

/// Qu(q, Z) = deg p - deg gcd(p, p' q) for the sturm backend, rank Her(p, q)
/// for the hermite backend. p must be nonzero; Z is its set of distinct roots.
long invertibility_query(const UniPoly& p, const UniPoly& q, Backend backend = Backend::Sturm);

/// TaQu(q, Z_R) = sum of sign q(x) over distinct real roots x of p.
long tarski_query(const UniPoly& p, const UniPoly& q, Backend backend = Backend::Sturm);

/// Handle on Z = zero set of p (made monic on construction) together with the
/// ledger of one determination run. A handle binds to the first polynomial
/// system passed to a product query; later calls must pass the same system.
class ZeroSetHandle {
public:
    /// Throws std::invalid_argument for the zero polynomial.
    explicit ZeroSetHandle(const UniPoly& p, Backend backend = Backend::Sturm);

    const UniPoly& polynomial() const { return p_; }
    Backend backend() const { return backend_; }
    QueryLedger& ledger() { return ledger_; }
    const QueryLedger& ledger() const { return ledger_; }

    /// Uncached single queries.
    long invertibility_query(const UniPoly& q) const;
    long tarski_query(const UniPoly& q) const;

    /// Qu(prod_{j in subset} plist_j, Z), subset given as 1-based indices.
    long invertibility_query_product(std::span<const UniPoly> plist, std::span<const int> subset);
    long invertibility_query_product(std::span<const UniPoly> plist, const ExponentVector& alpha);

    /// TaQu(prod plist_i^alpha_i, Z_R), alpha in {0,1,2}^s.
    long tarski_query_product(std::span<const UniPoly> plist, const ExponentVector& alpha);

    /// Product prod plist_i^alpha_i reduced mod p, factor by factor.
    UniPoly reduced_product(std::span<const UniPoly> plist, const ExponentVector& alpha);

private:
    void bind(std::span<const UniPoly> plist);
    long query_reduced(const UniPoly& q_reduced, bool tarski) const;

    UniPoly p_;
    UniPoly dp_;
    Backend backend_;
    std::vector<Rational> newton_;  // hermite backend only
    QueryLedger ledger_;
    std::optional<std::vector<UniPoly>> system_;
    std::vector<UniPoly> system_reduced_;
};

}  // namespace sdet
