#pragma once

// Helpers shared by the test programs. The linear algebra here is written
// independently of the library so it can serve as a reference.

#include "sdet/conditions.hpp"
#include "sdet/rational.hpp"
#include "sdet/unipoly.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace testing {

using sdet::ConditionList;
using sdet::Integer;
using sdet::IntMatrix;
using sdet::Rational;
using sdet::Row;
using sdet::UniPoly;

inline Rational q(long n, long d = 1) { return sdet::make_rational(n, d); }

inline UniPoly poly(std::initializer_list<long> coeffs) {
    std::vector<Rational> c;
    for (long x : coeffs) c.emplace_back(x);
    return UniPoly(std::move(c));
}

inline UniPoly x_minus(long a) { return UniPoly::linear_root(a); }

/// Zero-nonzero list from strings like "0110", indices 1..width.
inline ConditionList znz_list(const std::vector<std::string>& rows) {
    ConditionList out;
    const std::size_t width = rows.empty() ? 0 : rows.front().size();
    for (std::size_t k = 1; k <= width; ++k) out.indices.push_back(static_cast<int>(k));
    for (const auto& r : rows) out.rows.push_back(sdet::parse_znz_string(r));
    return out;
}

inline ConditionList sign_list(const std::vector<std::string>& rows) {
    ConditionList out;
    const std::size_t width = rows.empty() ? 0 : rows.front().size();
    for (std::size_t k = 1; k <= width; ++k) out.indices.push_back(static_cast<int>(k));
    for (const auto& r : rows) out.rows.push_back(sdet::parse_sign_string(r));
    return out;
}

/// Random canonical list of distinct rows over {0..alphabet-1}^width.
inline ConditionList random_list(std::mt19937_64& rng, std::size_t width, std::size_t max_card, unsigned alphabet) {
    std::uniform_int_distribution<int> digit(0, static_cast<int>(alphabet) - 1);
    std::uniform_int_distribution<std::size_t> card(1, max_card);
    const std::size_t target = card(rng);
    std::set<Row> rows;
    std::size_t total = 1;
    for (std::size_t k = 0; k < width && total < target; ++k) total *= alphabet;
    const std::size_t wanted = std::min(target, total);
    // Bias towards shared prefixes so that the recursion sees every branch type.
    std::uniform_int_distribution<int> coin(0, 3);
    Row base(width);
    for (auto& d : base) d = static_cast<std::uint8_t>(digit(rng));
    while (rows.size() < wanted) {
        Row r = base;
        for (auto& d : r)
            if (coin(rng) != 0) d = static_cast<std::uint8_t>(digit(rng));
        rows.insert(r);
    }
    ConditionList out;
    for (std::size_t k = 1; k <= width; ++k) out.indices.push_back(static_cast<int>(k));
    out.rows.assign(rows.begin(), rows.end());
    return out;
}

/// Sub-list keeping each row with probability 1/2 (at least one row).
inline ConditionList random_sublist(std::mt19937_64& rng, const ConditionList& sigma) {
    ConditionList out{sigma.indices, {}};
    std::bernoulli_distribution keep(0.5);
    for (const auto& r : sigma.rows)
        if (keep(rng)) out.rows.push_back(r);
    if (out.rows.empty()) out.rows.push_back(sigma.rows[rng() % sigma.rows.size()]);
    return out;
}

/// Reference solver: fraction-free (Bareiss) elimination on the augmented
/// integer matrix, then back substitution over Q. Empty result when singular.
inline std::vector<Rational> reference_solve(const IntMatrix& m, const std::vector<long>& v) {
    const std::size_t n = m.size();
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
        a[i][n] = v[i];
    }
    Integer prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) return {};
        std::swap(a[p], a[k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j <= n; ++j) {
                Integer t = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = t;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    std::vector<Rational> x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rational acc(a[i][n]);
        for (std::size_t j = i + 1; j < n; ++j) acc -= Rational(a[i][j]) * x[j];
        x[i] = acc / Rational(a[i][i]);
    }
    return x;
}

inline bool invertible(const IntMatrix& m) {
    std::vector<long> zero(m.size(), 0);
    return m.empty() || !reference_solve(m, zero).empty();
}

inline std::vector<long> mat_vec(const IntMatrix& m, const std::vector<long>& c) {
    std::vector<long> out(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < c.size(); ++j) out[i] += m[i][j] * c[j];
    return out;
}

inline UniPoly random_poly(std::mt19937_64& rng, int degree, long range) {
    std::uniform_int_distribution<long> coef(-range, range);
    std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
    for (auto& x : c) x = coef(rng);
    if (c.back() == 0) c.back() = 1;
    return UniPoly(std::move(c));
}

/// Exact determinant by cofactor expansion, for small matrices.
template <typename T>
T cofactor_det(const std::vector<std::vector<T>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return T(1);
    if (n == 1) return m[0][0];
    T acc(0);
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::vector<T>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<T> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            minor.push_back(std::move(row));
        }
        T term = m[0][c] * cofactor_det(minor);
        acc = (c % 2 == 0) ? T(acc + term) : T(acc - term);
    }
    return acc;
}

}  // namespace testing
