#include "sdet/realnonreal.hpp"

#include <map>
#include <stdexcept>

namespace sdet {

Row zero_pattern(const Row& sign_row) {
    Row out;
    out.reserve(sign_row.size());
    for (auto d : sign_row) out.push_back(d == 0 ? 0 : 1);
    return out;
}

RealNonrealResult real_nonreal_determination(ZeroSetHandle& handle, std::span<const UniPoly> system) {
    RealNonrealResult out;
    SignResult real = sign_determination(handle, system);
    ZnzResult all = zero_nonzero_determination(handle, system);

    std::map<Row, long> real_by_pattern;
    for (std::size_t j = 0; j < real.feas.size(); ++j) real_by_pattern[zero_pattern(real.feas.rows[j])] += real.counts[j];

    out.feas_nonreal.indices = all.feas.indices;
    for (std::size_t j = 0; j < all.feas.size(); ++j) {
        long remaining = all.counts[j];
        if (auto it = real_by_pattern.find(all.feas.rows[j]); it != real_by_pattern.end()) {
            remaining -= it->second;
            real_by_pattern.erase(it);
        }
        if (remaining < 0) throw std::logic_error("real-nonreal determination: more real than complex points");
        if (remaining == 0) continue;
        out.feas_nonreal.rows.push_back(all.feas.rows[j]);
        out.c_nonreal.push_back(remaining);
    }
    if (!real_by_pattern.empty()) {
        throw std::logic_error("real-nonreal determination: real zero pattern absent from Feas(P, Z)");
    }

    out.feas_real = std::move(real.feas);
    out.c_real = std::move(real.counts);
    out.feas_all = std::move(all.feas);
    out.c_all = std::move(all.counts);
    return out;
}

}  // namespace sdet
