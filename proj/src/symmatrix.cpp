#include "sdet/symmatrix.hpp"

#include <stdexcept>
#include <utility>

namespace sdet {

SymMatrix::SymMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

SymMatrix::SymMatrix(std::size_t dim, std::vector<Rational> entries) : dim_(dim), entries_(std::move(entries)) {
    if (entries_.size() != dim_ * dim_) throw std::invalid_argument("SymMatrix: wrong number of entries");
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) throw std::invalid_argument("SymMatrix: entries not symmetric");
}

void SymMatrix::set(std::size_t i, std::size_t j, const Rational& value) {
    entries_[i * dim_ + j] = value;
    entries_[j * dim_ + i] = value;
}

SymMatrix hermite_matrix_from_sums(std::span<const Rational> sums, std::size_t dim, const UniPoly& q_reduced) {
    SymMatrix h(dim);
    if (q_reduced.is_zero()) return h;
    const auto& q = q_reduced.coeffs();
    // Hankel: entry depends on i + j only.
    std::vector<Rational> diag_sum(2 * dim - 1);
    for (std::size_t k = 0; k < diag_sum.size(); ++k) {
        Rational acc = 0;
        for (std::size_t m = 0; m < q.size(); ++m) {
            if (sgn(q[m]) != 0) acc += q[m] * sums[k + m];
        }
        diag_sum[k] = acc;
    }
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i; j < dim; ++j) h.set(i, j, diag_sum[i + j]);
    return h;
}

SymMatrix hermite_matrix(const UniPoly& p, const UniPoly& q) {
    if (p.degree() < 1 || !p.is_monic()) {
        throw std::invalid_argument("hermite_matrix requires a monic polynomial of degree >= 1");
    }
    const std::size_t d = static_cast<std::size_t>(p.degree());
    const auto sums = newton_sums(p, 3 * d - 2);
    return hermite_matrix_from_sums(sums, d, rem(q, p));
}

UniPoly characteristic_polynomial(const SymMatrix& m) {
    const std::size_t n = m.dim();
    std::vector<std::vector<Rational>> h(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) h[i][j] = m(i, j);

    // Similarity reduction to upper Hessenberg form.
    for (std::size_t col = 0; col + 2 < n; ++col) {
        const std::size_t piv_row = col + 1;
        std::size_t found = piv_row;
        while (found < n && sgn(h[found][col]) == 0) ++found;
        if (found == n) continue;
        if (found != piv_row) {
            std::swap(h[found], h[piv_row]);
            for (std::size_t r = 0; r < n; ++r) std::swap(h[r][found], h[r][piv_row]);
        }
        for (std::size_t i = piv_row + 1; i < n; ++i) {
            if (sgn(h[i][col]) == 0) continue;
            const Rational u = h[i][col] / h[piv_row][col];
            for (std::size_t j = 0; j < n; ++j) h[i][j] -= u * h[piv_row][j];
            for (std::size_t r = 0; r < n; ++r) h[r][piv_row] += u * h[r][i];
        }
    }

    // p_m = (X - h_mm) p_{m-1} - sum_i (h_{m-i,m} prod_{j} h_{j,j-1}) p_{m-i-1}
    std::vector<UniPoly> p;
    p.reserve(n + 1);
    p.push_back(UniPoly::constant(1));
    const UniPoly x = UniPoly::monomial(1, 1);
    for (std::size_t m = 1; m <= n; ++m) {
        UniPoly pm = (x - UniPoly::constant(h[m - 1][m - 1])) * p[m - 1];
        Rational t = 1;
        for (std::size_t i = 1; i < m; ++i) {
            t *= h[m - i][m - i - 1];
            if (sgn(t) == 0) break;
            pm -= p[m - i - 1] * (t * h[m - i - 1][m - 1]);
        }
        p.push_back(std::move(pm));
    }
    return p.back();
}

RankSignature rank_and_signature(const SymMatrix& m) {
    const std::size_t n = m.dim();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);

    // Congruence diagonalization; pivot signs give the inertia.
    RankSignature out;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && sgn(a[piv][piv]) == 0) ++piv;
        if (piv == n) {
            // Zero diagonal: x_i += x_j turns a nonzero a_ij into a_ii = 2 a_ij.
            std::size_t pi = n, pj = n;
            for (std::size_t i = k; i < n && pi == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (sgn(a[i][j]) != 0) {
                        pi = i;
                        pj = j;
                        break;
                    }
            if (pi == n) break;
            for (std::size_t t = k; t < n; ++t) a[pi][t] += a[pj][t];
            for (std::size_t t = k; t < n; ++t) a[t][pi] += a[t][pj];
            piv = pi;
        }
        if (piv != k) {
            std::swap(a[piv], a[k]);
            for (std::size_t r = 0; r < n; ++r) std::swap(a[r][piv], a[r][k]);
        }
        const Rational pivot = a[k][k];
        ++out.rank;
        out.signature += sgn(pivot);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (sgn(a[i][k]) == 0) continue;
            const Rational f = a[i][k] / pivot;
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] -= f * a[k][j];
            a[i][k] = 0;
        }
        for (std::size_t j = k + 1; j < n; ++j) a[k][j] = 0;
    }
    return out;
}

}  // namespace sdet
