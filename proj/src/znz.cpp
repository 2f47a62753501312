#include "sdet/znz.hpp"

#include <algorithm>
#include <stdexcept>

namespace sdet {

SubsetList adapted_family(const ConditionList& sigma, const InfoMatrix& info) {
    return adapted_from_info(sigma, info);
}

Compression compress(const ConditionList& sigma) {
    if (sigma.empty()) throw std::invalid_argument("comp is undefined for an empty condition list");
    require_canonical(sigma, 2);
    Compression out;
    std::size_t prev_card = 1;  // card of the restriction to the empty prefix
    for (std::size_t k = 1; k <= sigma.indices.size(); ++k) {
        std::size_t card = 1;
        for (std::size_t j = 1; j < sigma.rows.size(); ++j) {
            const auto& a = sigma.rows[j - 1];
            const auto& b = sigma.rows[j];
            if (!std::equal(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(k), b.begin())) ++card;
        }
        if (card > prev_card) out.comp.push_back(sigma.indices[k - 1]);
        prev_card = card;
    }
    out.list = restrict_to(sigma, out.comp);
    return out;
}

IntMatrix mat_of(const SubsetList& subsets, const ConditionList& sigma) {
    std::vector<std::size_t> col_of(subsets.indices.size());
    for (std::size_t k = 0; k < subsets.indices.size(); ++k) {
        auto it = std::find(sigma.indices.begin(), sigma.indices.end(), subsets.indices[k]);
        if (it == sigma.indices.end()) throw std::invalid_argument("subset index outside the condition index set");
        col_of[k] = static_cast<std::size_t>(it - sigma.indices.begin());
    }
    IntMatrix m(subsets.size(), std::vector<int>(sigma.size(), 1));
    for (std::size_t i = 0; i < subsets.size(); ++i)
        for (std::size_t j = 0; j < sigma.size(); ++j)
            for (std::size_t k = 0; k < col_of.size(); ++k)
                if (subsets.rows[i][k] != 0 && sigma.rows[j][col_of[k]] == 0) {
                    m[i][j] = 0;
                    break;
                }
    return m;
}

// ---------------------------------------------------------------------------
// Linear Solving

namespace {

struct SolveContext {
    const InfoMatrix& info;
    const IntMatrix& mat;
};

// pos: increasing positions into the top-level list; v aligned with pos.
std::vector<long> solve_block(const SolveContext& ctx, const std::vector<std::size_t>& pos, std::size_t depth,
                              const std::vector<long>& v) {
    if (depth == 0) return v;
    const std::size_t col = depth - 1;

    std::vector<std::size_t> l0, l1, lstar, l;  // positions
    std::vector<std::size_t> k0, k1, kstar;     // offsets into pos
    for (std::size_t k = 0; k < pos.size(); ++k) {
        switch (ctx.info.rows[pos[k]][col]) {
            case InfoEntry::Zero: l0.push_back(pos[k]); k0.push_back(k); break;
            case InfoEntry::One: l1.push_back(pos[k]); k1.push_back(k); break;
            case InfoEntry::Star: lstar.push_back(pos[k]); kstar.push_back(k); break;
            default: throw std::invalid_argument("zero-nonzero Info matrix holds a non-binary entry");
        }
    }
    if (l0.size() != l1.size()) throw std::invalid_argument("Info column does not pair 0-rows with 1-rows");

    // l = l0 u l*, kept in list order; remember where each lands.
    std::vector<long> v_l;
    std::vector<std::size_t> slot_in_l(pos.size(), 0);
    for (std::size_t k = 0; k < pos.size(); ++k) {
        if (ctx.info.rows[pos[k]][col] == InfoEntry::One) continue;
        slot_in_l[k] = l.size();
        l.push_back(pos[k]);
        v_l.push_back(v[k]);
    }

    const std::vector<long> t_l = solve_block(ctx, l, depth - 1, v_l);

    std::vector<long> c(pos.size());
    for (std::size_t k : k0) c[k] = t_l[slot_in_l[k]];
    for (std::size_t k : kstar) c[k] = t_l[slot_in_l[k]];
    if (l1.empty()) return c;

    std::vector<long> t_l1(l1.size());
    for (std::size_t a = 0; a < l1.size(); ++a) {
        long acc = v[k1[a]];
        for (std::size_t b = 0; b < lstar.size(); ++b)
            if (ctx.mat[l1[a]][lstar[b]] != 0) acc -= ctx.mat[l1[a]][lstar[b]] * t_l[slot_in_l[kstar[b]]];
        t_l1[a] = acc;
    }

    const std::vector<long> c_l1 = solve_block(ctx, l1, depth - 1, t_l1);
    for (std::size_t a = 0; a < l1.size(); ++a) {
        c[k1[a]] = c_l1[a];
        c[k0[a]] -= c_l1[a];  // c(l0) = t(l0) - c(l1)
    }
    return c;
}

}  // namespace

std::vector<long> linear_solve(const ConditionList& sigma, const InfoMatrix& info, const IntMatrix& mat,
                               std::span<const long> v) {
    const std::size_t n = sigma.size();
    if (info.size() != n || mat.size() != n || v.size() != n) {
        throw std::invalid_argument("linear_solve: dimension mismatch");
    }
    for (const auto& row : mat)
        if (row.size() != n) throw std::invalid_argument("linear_solve: matrix is not square");
    for (const auto& row : info.rows)
        if (row.size() != sigma.indices.size()) throw std::invalid_argument("linear_solve: Info width mismatch");
    std::vector<std::size_t> pos(n);
    for (std::size_t k = 0; k < n; ++k) pos[k] = k;
    return solve_block(SolveContext{info, mat}, pos, sigma.indices.size(), std::vector<long>(v.begin(), v.end()));
}

// ---------------------------------------------------------------------------
// Zero-nonzero Determination

namespace {

ExponentVector alpha_of(const std::vector<int>& subset, std::size_t s) {
    ExponentVector alpha(s, 0);
    for (int j : subset) alpha[static_cast<std::size_t>(j - 1)] = 1;
    return alpha;
}

void append_digit(ConditionList& sigma, int index, std::uint8_t digit) {
    sigma.indices.push_back(index);
    for (auto& row : sigma.rows) row.push_back(digit);
}

// Nondegenerate step: P_i vanishes on some points of Z and not on others.
void split_step(ZeroSetHandle& handle, std::span<const UniPoly> system, int i, ZnzState& st) {
    const std::size_t s = system.size();
    const std::size_t n = st.sigma.size();

    // Auxiliary list Comp(Sigma_{i-1}) ^ {0,1}: rows duplicated, Info and
    // Mat follow the doubled layout (every restriction has two extensions).
    ConditionList aux;
    aux.indices = st.comp;
    aux.indices.push_back(i);
    const ConditionList comp_list = restrict_to(st.sigma, st.comp);
    InfoMatrix aux_info;
    IntMatrix aux_mat(2 * n, std::vector<int>(2 * n, 0));
    std::vector<long> v(2 * n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::uint8_t b = 0; b < 2; ++b) {
            Row r = comp_list.rows[a];
            r.push_back(b);
            aux.rows.push_back(std::move(r));
            auto irow = st.info.rows[a];
            irow.push_back(b == 0 ? InfoEntry::Zero : InfoEntry::One);
            aux_info.rows.push_back(std::move(irow));
        }
        for (std::size_t j = 0; j < n; ++j) {
            const int m = st.mat[a][j];
            aux_mat[2 * a][2 * j] = m;
            aux_mat[2 * a][2 * j + 1] = m;
            aux_mat[2 * a + 1][2 * j] = 0;
            aux_mat[2 * a + 1][2 * j + 1] = m;
        }
        const std::vector<int> subset = st.ada.subset(a);
        const auto cached = handle.ledger().find_invertibility(alpha_of(subset, s));
        if (!cached) throw std::logic_error("zero-nonzero determination: query of Ada_{i-1} missing from the ledger");
        v[2 * a] = *cached;
        std::vector<int> with_i = subset;
        with_i.push_back(i);
        v[2 * a + 1] = handle.invertibility_query_product(system, alpha_of(with_i, s));
    }

    const std::vector<long> c = linear_solve(aux, aux_info, aux_mat, v);

    // Prune empty conditions; record l0 / l1 / l* over the new list and, for
    // each new row, the Sigma_{i-1} row it extends.
    ConditionList sigma_i{st.sigma.indices, {}};
    sigma_i.indices.push_back(i);
    std::vector<long> counts_i;
    std::vector<std::size_t> parent;
    std::vector<InfoEntry> last;
    for (std::size_t j = 0; j < n; ++j) {
        const long c0 = c[2 * j], c1 = c[2 * j + 1];
        if (c0 < 0 || c1 < 0 || c0 + c1 != st.counts[j]) {
            throw std::logic_error("zero-nonzero determination: inconsistent invertibility queries");
        }
        const bool both = c0 > 0 && c1 > 0;
        for (std::uint8_t b = 0; b < 2; ++b) {
            const long cnt = b == 0 ? c0 : c1;
            if (cnt == 0) continue;
            Row r = st.sigma.rows[j];
            r.push_back(b);
            sigma_i.rows.push_back(std::move(r));
            counts_i.push_back(cnt);
            parent.push_back(j);
            last.push_back(both ? (b == 0 ? InfoEntry::Zero : InfoEntry::One) : InfoEntry::Star);
        }
    }

    const bool grew = sigma_i.size() > n;
    st.sigma = std::move(sigma_i);
    st.counts = std::move(counts_i);
    if (!grew) return;

    const std::vector<int> prev_comp = st.comp;
    st.comp.push_back(i);

    // Xi'_i: rows of l1 restricted to comp_{i-1}.
    ConditionList xi1{prev_comp, {}};
    for (std::size_t r = 0; r < st.sigma.size(); ++r)
        if (last[r] == InfoEntry::One) xi1.rows.push_back(comp_list.rows[parent[r]]);
    const InfoMatrix info_xi1 = get_info(xi1);
    const SubsetList ada_xi1 = adapted_family(xi1, info_xi1);

    const std::size_t m = st.sigma.size();
    InfoMatrix info_i;
    SubsetList ada_i{st.comp, {}};
    std::size_t k1 = 0;
    std::vector<std::size_t> xi1_row(m, 0);
    for (std::size_t r = 0; r < m; ++r) {
        if (last[r] == InfoEntry::One) {
            xi1_row[r] = k1;
            auto irow = info_xi1.rows[k1];
            irow.push_back(InfoEntry::One);
            info_i.rows.push_back(std::move(irow));
            Row arow = ada_xi1.rows[k1];
            arow.push_back(1);
            ada_i.rows.push_back(std::move(arow));
            ++k1;
        } else {
            auto irow = st.info.rows[parent[r]];
            irow.push_back(last[r]);
            info_i.rows.push_back(std::move(irow));
            Row arow = st.ada.rows[parent[r]];
            arow.push_back(0);
            ada_i.rows.push_back(std::move(arow));
        }
    }

    // Mat_i in block form: rows of l copy Mat_{i-1}; rows of l1 are
    // (Ada(Xi'_i), i) evaluated on every condition.
    IntMatrix mat_i(m, std::vector<int>(m, 0));
    const std::size_t last_col = st.sigma.indices.size() - 1;
    std::vector<std::size_t> comp_cols;
    for (int idx : prev_comp)
        comp_cols.push_back(static_cast<std::size_t>(
            std::find(st.sigma.indices.begin(), st.sigma.indices.end(), idx) - st.sigma.indices.begin()));
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t col = 0; col < m; ++col) {
            if (last[r] != InfoEntry::One) {
                mat_i[r][col] = st.mat[parent[r]][parent[col]];
                continue;
            }
            const auto& cond = st.sigma.rows[col];
            int val = cond[last_col] != 0 ? 1 : 0;
            const Row& sub = ada_xi1.rows[xi1_row[r]];
            for (std::size_t k = 0; k < sub.size() && val != 0; ++k)
                if (sub[k] != 0 && cond[comp_cols[k]] == 0) val = 0;
            mat_i[r][col] = val;
        }
    }

    st.info = std::move(info_i);
    st.ada = std::move(ada_i);
    st.mat = std::move(mat_i);
}

}  // namespace

ZnzResult zero_nonzero_determination(ZeroSetHandle& handle, std::span<const UniPoly> system) {
    const std::size_t s = system.size();
    ZnzResult result;
    const long r = handle.invertibility_query_product(system, ExponentVector(s, 0));
    if (r == 0) {
        for (std::size_t k = 1; k <= s; ++k) result.feas.indices.push_back(static_cast<int>(k));
        result.state.sigma = result.feas;
        return result;
    }

    ZnzState& st = result.state;
    st.sigma = ConditionList{{}, {Row{}}};
    st.counts = {r};
    st.info.rows = {std::vector<InfoEntry>{}};
    st.ada = SubsetList{{}, {Row{}}};
    st.mat = IntMatrix{std::vector<int>{1}};

    for (std::size_t k = 0; k < s; ++k) {
        const int i = static_cast<int>(k) + 1;
        ExponentVector alpha(s, 0);
        alpha[k] = 1;
        const long nonzero = handle.invertibility_query_product(system, alpha);
        const long zero = r - nonzero;
        if (zero < 0) throw std::logic_error("zero-nonzero determination: Qu(P_i) exceeds Qu(1)");

        ZnzStep step{i, zero, nonzero, ZnzBranch::Split, 0, {}};
        if (zero == 0 || nonzero == 0) {
            step.branch = zero == 0 ? ZnzBranch::AlwaysNonzero : ZnzBranch::AlwaysZero;
            append_digit(st.sigma, i, zero == 0 ? 1 : 0);
        } else {
            split_step(handle, system, i, st);
        }
        step.card = st.sigma.size();
        step.comp = st.comp;
        result.trace.push_back(std::move(step));
    }

    result.feas = st.sigma;
    result.counts = st.counts;
    return result;
}

std::vector<std::vector<int>> used_sets(const ConditionList& feas, std::size_t s) {
    std::vector<std::vector<int>> used{{}};
    if (feas.empty()) return used;
    for (std::size_t k = 0; k < s; ++k) {
        const int i = static_cast<int>(k) + 1;
        const ConditionList only_i = restrict_to(feas, {i});
        if (only_i.size() == 1) {
            used.push_back({i});
            continue;
        }
        std::vector<int> before;
        for (int j = 1; j < i; ++j) before.push_back(j);
        const ConditionList prev = restrict_to(feas, before);
        const SubsetList ada = adapted_family(prev, get_info(prev));
        for (std::size_t a = 0; a < ada.size(); ++a) {
            auto subset = ada.subset(a);
            subset.push_back(i);
            used.push_back(std::move(subset));
        }
    }
    return used;
}

}  // namespace sdet
