#include "sdet/signdet.hpp"

#include <algorithm>
#include <stdexcept>

namespace sdet {

BaseSignCounts base_sign_solve(long taqu0, long taqu1, long taqu2) {
    const long twice_pos = taqu2 + taqu1;
    const long twice_neg = taqu2 - taqu1;
    if (twice_pos % 2 != 0 || twice_neg % 2 != 0) throw std::logic_error("base_sign_solve: non-integral counts");
    BaseSignCounts c{taqu0 - taqu2, twice_pos / 2, twice_neg / 2};
    if (c.zero < 0 || c.positive < 0 || c.negative < 0) {
        throw std::logic_error("base_sign_solve: inconsistent Tarski-queries");
    }
    return c;
}

SubsetList adapted_exponents(const ConditionList& sigma) {
    require_canonical(sigma, 3);
    return adapted_from_info(sigma, get_info(sigma));
}

namespace {

int sign_value(std::uint8_t digit) { return digit == 0 ? 0 : digit == 1 ? 1 : -1; }

int power_of_sign(int v, std::uint8_t e) {
    if (e == 0) return 1;
    if (e == 1) return v;
    return v * v;
}

}  // namespace

IntMatrix sign_mat_of(const SubsetList& exponents, const ConditionList& sigma) {
    std::vector<std::size_t> col_of(exponents.indices.size());
    for (std::size_t k = 0; k < exponents.indices.size(); ++k) {
        auto it = std::find(sigma.indices.begin(), sigma.indices.end(), exponents.indices[k]);
        if (it == sigma.indices.end()) throw std::invalid_argument("exponent index outside the condition index set");
        col_of[k] = static_cast<std::size_t>(it - sigma.indices.begin());
    }
    IntMatrix m(exponents.size(), std::vector<int>(sigma.size(), 1));
    for (std::size_t a = 0; a < exponents.size(); ++a)
        for (std::size_t j = 0; j < sigma.size(); ++j) {
            int val = 1;
            for (std::size_t k = 0; k < col_of.size() && val != 0; ++k)
                val *= power_of_sign(sign_value(sigma.rows[j][col_of[k]]), exponents.rows[a][k]);
            m[a][j] = val;
        }
    return m;
}

std::vector<Rational> solve_exact(const IntMatrix& m, std::span<const long> v) {
    const std::size_t n = m.size();
    if (v.size() != n) throw std::invalid_argument("solve_exact: dimension mismatch");
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw std::invalid_argument("solve_exact: matrix is not square");
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
        a[i][n] = v[i];
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && sgn(a[piv][col]) == 0) ++piv;
        if (piv == n) throw std::invalid_argument("solve_exact: singular matrix");
        std::swap(a[piv], a[col]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || sgn(a[i][col]) == 0) continue;
            const Rational f = a[i][col] / a[col][col];
            for (std::size_t j = col; j <= n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
    return x;
}

SignResult sign_determination(ZeroSetHandle& handle, std::span<const UniPoly> system) {
    const std::size_t s = system.size();
    SignResult result;
    const long r = handle.tarski_query_product(system, ExponentVector(s, 0));
    if (r == 0) {
        for (std::size_t k = 1; k <= s; ++k) result.feas.indices.push_back(static_cast<int>(k));
        return result;
    }

    ConditionList sigma{{}, {Row{}}};
    std::vector<long> counts{r};
    SubsetList ada{{}, {Row{}}};

    for (std::size_t k = 0; k < s; ++k) {
        const int i = static_cast<int>(k) + 1;
        ExponentVector alpha(s, 0);
        alpha[k] = 1;
        const long t1 = handle.tarski_query_product(system, alpha);
        alpha[k] = 2;
        const long t2 = handle.tarski_query_product(system, alpha);
        const BaseSignCounts base = base_sign_solve(r, t1, t2);

        std::vector<std::uint8_t> values;  // realized digits for P_i, in order 0, +, -
        if (base.zero > 0) values.push_back(0);
        if (base.positive > 0) values.push_back(1);
        if (base.negative > 0) values.push_back(2);

        if (values.size() == 1) {
            sigma.indices.push_back(i);
            for (auto& row : sigma.rows) row.push_back(values[0]);
            continue;
        }

        // Sigma_{i-1} ^ values with the product exponent family.
        ConditionList aux{sigma.indices, {}};
        aux.indices.push_back(i);
        for (const auto& row : sigma.rows)
            for (auto d : values) {
                Row r2 = row;
                r2.push_back(d);
                aux.rows.push_back(std::move(r2));
            }
        SubsetList exps{ada.indices, {}};
        exps.indices.push_back(i);
        std::vector<long> v;
        for (const auto& arow : ada.rows) {
            ExponentVector base_alpha(s, 0);
            for (std::size_t c = 0; c < ada.indices.size(); ++c)
                base_alpha[static_cast<std::size_t>(ada.indices[c] - 1)] = arow[c];
            for (std::uint8_t e = 0; e < values.size(); ++e) {
                Row er = arow;
                er.push_back(e);
                exps.rows.push_back(std::move(er));
                ExponentVector a2 = base_alpha;
                a2[k] = e;
                if (e == 0) {
                    const auto cached = handle.ledger().find_tarski(a2);
                    if (!cached) throw std::logic_error("sign determination: Tarski-query of Ada_{i-1} missing");
                    v.push_back(*cached);
                } else {
                    v.push_back(handle.tarski_query_product(system, a2));
                }
            }
        }

        const auto sol = solve_exact(sign_mat_of(exps, aux), v);

        ConditionList next{aux.indices, {}};
        std::vector<long> next_counts;
        for (std::size_t j = 0; j < aux.size(); ++j) {
            if (sol[j].get_den() != 1 || sgn(sol[j]) < 0 || !sol[j].get_num().fits_slong_p()) {
                throw std::logic_error("sign determination: inconsistent Tarski-queries");
            }
            const long cnt = sol[j].get_num().get_si();
            if (cnt == 0) continue;
            next.rows.push_back(aux.rows[j]);
            next_counts.push_back(cnt);
        }
        sigma = std::move(next);
        counts = std::move(next_counts);
        ada = adapted_exponents(sigma);
    }

    result.feas = std::move(sigma);
    result.counts = std::move(counts);
    result.ada = std::move(ada);
    return result;
}

}  // namespace sdet
