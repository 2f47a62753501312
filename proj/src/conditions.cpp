#include "sdet/conditions.hpp"

#include <algorithm>
#include <stdexcept>

namespace sdet {

std::vector<int> SubsetList::subset(std::size_t j) const {
    std::vector<int> out;
    for (std::size_t k = 0; k < indices.size(); ++k)
        if (rows[j][k] != 0) out.push_back(indices[k]);
    return out;
}

bool is_canonical(const ConditionList& sigma, unsigned alphabet) {
    for (std::size_t k = 1; k < sigma.indices.size(); ++k)
        if (sigma.indices[k - 1] >= sigma.indices[k]) return false;
    for (std::size_t j = 0; j < sigma.rows.size(); ++j) {
        const auto& row = sigma.rows[j];
        if (row.size() != sigma.indices.size()) return false;
        for (auto d : row)
            if (d >= alphabet) return false;
        if (j > 0 && !(sigma.rows[j - 1] < row)) return false;
    }
    return true;
}

void require_canonical(const ConditionList& sigma, unsigned alphabet) {
    if (!is_canonical(sigma, alphabet)) {
        throw std::invalid_argument("condition list is not ordered, duplicate-free and well-formed");
    }
}

ConditionList restrict_to(const ConditionList& sigma, const std::vector<int>& sub_indices) {
    std::vector<std::size_t> cols;
    for (int idx : sub_indices) {
        auto it = std::find(sigma.indices.begin(), sigma.indices.end(), idx);
        if (it == sigma.indices.end()) throw std::invalid_argument("restriction to an index outside the list");
        cols.push_back(static_cast<std::size_t>(it - sigma.indices.begin()));
    }
    ConditionList out{sub_indices, {}};
    for (const auto& row : sigma.rows) {
        Row r;
        r.reserve(cols.size());
        for (auto c : cols) r.push_back(row[c]);
        out.rows.push_back(std::move(r));
    }
    std::sort(out.rows.begin(), out.rows.end());
    out.rows.erase(std::unique(out.rows.begin(), out.rows.end()), out.rows.end());
    return out;
}

namespace {

using InfoRow = std::vector<InfoEntry>;

// rows: sorted and distinct on their first `width` digits.
std::vector<InfoRow> info_rows(const std::vector<const Row*>& rows, std::size_t width) {
    if (rows.empty()) return {};
    if (width == 0) return std::vector<InfoRow>(rows.size());
    const std::size_t prefix = width - 1;
    auto same_prefix = [prefix](const Row& a, const Row& b) {
        return std::equal(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(prefix), b.begin());
    };

    // Consecutive groups sharing a restriction to the leading columns.
    std::vector<std::pair<std::size_t, std::size_t>> groups;  // [begin, end)
    for (std::size_t j = 0; j < rows.size();) {
        std::size_t e = j + 1;
        while (e < rows.size() && same_prefix(*rows[j], *rows[e])) ++e;
        if (e - j > 3) throw std::invalid_argument("more than three extensions of one restriction");
        groups.emplace_back(j, e);
        j = e;
    }

    std::vector<const Row*> xi, xi1, xi2;
    for (const auto& [b, e] : groups) {
        xi.push_back(rows[b]);
        if (e - b >= 2) xi1.push_back(rows[b]);
        if (e - b == 3) xi2.push_back(rows[b]);
    }
    const auto info_xi = info_rows(xi, prefix);
    const auto info_xi1 = info_rows(xi1, prefix);
    const auto info_xi2 = info_rows(xi2, prefix);

    std::vector<InfoRow> out(rows.size());
    std::size_t k1 = 0, k2 = 0;
    for (std::size_t g = 0; g < groups.size(); ++g) {
        const auto [b, e] = groups[g];
        if (e - b == 1) {
            out[b] = info_xi[g];
            out[b].push_back(InfoEntry::Star);
            continue;
        }
        out[b] = info_xi[g];
        out[b].push_back(InfoEntry::Zero);
        out[b + 1] = info_xi1[k1++];
        out[b + 1].push_back(InfoEntry::One);
        if (e - b == 3) {
            out[b + 2] = info_xi2[k2++];
            out[b + 2].push_back(InfoEntry::Two);
        }
    }
    return out;
}

}  // namespace

InfoMatrix get_info(const ConditionList& sigma) {
    require_canonical(sigma, 3);
    std::vector<const Row*> rows;
    rows.reserve(sigma.rows.size());
    for (const auto& r : sigma.rows) rows.push_back(&r);
    return {info_rows(rows, sigma.indices.size())};
}

SubsetList adapted_from_info(const ConditionList& sigma, const InfoMatrix& info) {
    if (info.size() != sigma.size()) throw std::invalid_argument("Info matrix does not match the condition list");
    SubsetList out{sigma.indices, {}};
    out.rows.reserve(info.size());
    for (const auto& irow : info.rows) {
        if (irow.size() != sigma.indices.size()) throw std::invalid_argument("Info row width mismatch");
        Row r(irow.size(), 0);
        for (std::size_t k = 0; k < irow.size(); ++k) {
            if (irow[k] == InfoEntry::One) r[k] = 1;
            if (irow[k] == InfoEntry::Two) r[k] = 2;
        }
        out.rows.push_back(std::move(r));
    }
    return out;
}

std::string znz_string(const Row& row) {
    std::string s;
    for (auto d : row) s.push_back(d == 0 ? '0' : '1');
    return s;
}

std::string sign_string(const Row& row) {
    std::string s;
    for (auto d : row) s.push_back(d == 0 ? '0' : d == 1 ? '+' : '-');
    return s;
}

Row parse_znz_string(const std::string& text) {
    Row r;
    for (char ch : text) {
        if (ch != '0' && ch != '1') throw std::invalid_argument("zero-nonzero condition must be over {0,1}");
        r.push_back(static_cast<std::uint8_t>(ch - '0'));
    }
    return r;
}

Row parse_sign_string(const std::string& text) {
    Row r;
    for (char ch : text) {
        switch (ch) {
            case '0': r.push_back(0); break;
            case '+': r.push_back(1); break;
            case '-': r.push_back(2); break;
            default: throw std::invalid_argument("sign condition must be over {0,+,-}");
        }
    }
    return r;
}

}  // namespace sdet
