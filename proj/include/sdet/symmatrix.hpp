#pragma once

#include "sdet/rational.hpp"
#include "sdet/unipoly.hpp"

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

namespace sdet {

/// Dense symmetric matrix over Q, row-major.
class SymMatrix {
public:
    SymMatrix() = default;
    /// Zero matrix of the given dimension.
    explicit SymMatrix(std::size_t dim);
    /// Throws std::invalid_argument unless entries has dim*dim elements and
    /// is symmetric.
    SymMatrix(std::size_t dim, std::vector<Rational> entries);

    std::size_t dim() const { return dim_; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
    /// Writes both (i, j) and (j, i).
    void set(std::size_t i, std::size_t j, const Rational& value);
    const std::vector<Rational>& entries() const { return entries_; }

    friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<Rational> entries_;
};

/// Her(p, q): entry (i, j) = sum_m q_m s_{i+j+m} with q reduced mod p and
/// s_k the Newton sums of p. Requires p monic of degree >= 1.
SymMatrix hermite_matrix(const UniPoly& p, const UniPoly& q);

/// Same, with the Newton sums of p supplied (at least 3*deg(p) - 2 of them)
/// and q already reduced mod p.
SymMatrix hermite_matrix_from_sums(std::span<const Rational> sums, std::size_t dim, const UniPoly& q_reduced);

/// det(lambda*I - m), ascending coefficients, via reduction to Hessenberg form.
UniPoly characteristic_polynomial(const SymMatrix& m);

struct RankSignature {
    std::size_t rank = 0;
    long signature = 0;
    friend bool operator==(const RankSignature&, const RankSignature&) = default;
};

/// Rank and signature by exact congruence diagonalization (Sylvester's law
/// of inertia).
RankSignature rank_and_signature(const SymMatrix& m);

/// Division-free Berkowitz recurrence over any commutative ring T (needs
/// T(0), T(1), +, -, *). Returns, for k = 1..n, the characteristic
/// polynomial of the leading k x k principal submatrix as descending
/// coefficients [1, c_1, ..., c_k].
template <typename T>
std::vector<std::vector<T>> berkowitz_leading_charpolys(const std::vector<std::vector<T>>& a) {
    const std::size_t n = a.size();
    std::vector<std::vector<T>> out;
    out.reserve(n);
    std::vector<T> prev{T(1)};
    for (std::size_t r = 1; r <= n; ++r) {
        const std::size_t k = r - 1;  // new row/column index
        // Toeplitz column t_0..t_r
        std::vector<T> t(r + 1, T(0));
        t[0] = T(1);
        t[1] = T(0) - a[k][k];
        std::vector<T> v(k);
        for (std::size_t i = 0; i < k; ++i) v[i] = a[i][k];
        for (std::size_t step = 2; step <= r; ++step) {
            T dot(0);
            for (std::size_t i = 0; i < k; ++i) dot = dot + a[k][i] * v[i];
            t[step] = T(0) - dot;
            if (step == r) break;
            std::vector<T> w(k, T(0));
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) w[i] = w[i] + a[i][j] * v[j];
            v = std::move(w);
        }
        std::vector<T> next(r + 1, T(0));
        for (std::size_t row = 0; row <= r; ++row)
            for (std::size_t j = 0; j <= std::min(row, r - 1); ++j) next[row] = next[row] + t[row - j] * prev[j];
        out.push_back(next);
        prev = std::move(next);
    }
    return out;
}

}  // namespace sdet
