#pragma once

// Condition lists, {0,1,*}-valued Info matrices and index-subset / exponent
// families shared by zero-nonzero and sign determination.

#include <cstdint>
#include <string>
#include <vector>

namespace sdet {

/// One condition or one subset, as a digit per column of an index set.
/// Zero-nonzero conditions and subsets use digits {0,1}; sign conditions use
/// {0,1,2} with 2 standing for -1, so that digit order is 0 < 1 < -1.
using Row = std::vector<std::uint8_t>;

/// Lexicographically increasing, duplicate-free list of conditions over the
/// 1-based, increasing index set `indices`.
struct ConditionList {
    std::vector<int> indices;
    std::vector<Row> rows;

    std::size_t size() const { return rows.size(); }
    bool empty() const { return rows.empty(); }
    friend bool operator==(const ConditionList&, const ConditionList&) = default;
};

/// Rows of subsets (digit 1 = member) or exponent vectors (digits 0..2) over
/// `indices`.
struct SubsetList {
    std::vector<int> indices;
    std::vector<Row> rows;

    std::size_t size() const { return rows.size(); }
    /// Row j as a list of 1-based indices with a nonzero digit.
    std::vector<int> subset(std::size_t j) const;
    friend bool operator==(const SubsetList&, const SubsetList&) = default;
};

enum class InfoEntry : std::uint8_t { Zero = 0, One = 1, Two = 2, Star = 3 };

/// Info(Sigma): one row per condition, one column per index.
struct InfoMatrix {
    std::vector<std::vector<InfoEntry>> rows;
    std::size_t size() const { return rows.size(); }
    friend bool operator==(const InfoMatrix&, const InfoMatrix&) = default;
};

using IntMatrix = std::vector<std::vector<int>>;

/// Rows strictly increasing, every digit < alphabet, widths match indices.
bool is_canonical(const ConditionList& sigma, unsigned alphabet);

/// Throws std::invalid_argument unless is_canonical(sigma, alphabet).
void require_canonical(const ConditionList& sigma, unsigned alphabet);

/// Restriction of every row to the given sub-index-set, duplicates merged.
ConditionList restrict_to(const ConditionList& sigma, const std::vector<int>& sub_indices);

/// Info(Sigma) for zero-nonzero (alphabet 2) or sign (alphabet 3) lists. The
/// last column marks, for each restriction to the leading columns with more
/// than one extension, which extension a row is (Zero, One, Two), and Star
/// for rows whose restriction has a single extension.
InfoMatrix get_info(const ConditionList& sigma);

/// Rows of Info with Star read as 0: Ada(Sigma) for zero-nonzero lists, the
/// adapted exponent family for sign lists.
SubsetList adapted_from_info(const ConditionList& sigma, const InfoMatrix& info);

/// "0110" for zero-nonzero rows, "0+-" for sign rows.
std::string znz_string(const Row& row);
std::string sign_string(const Row& row);
Row parse_znz_string(const std::string& text);
Row parse_sign_string(const std::string& text);

}  // namespace sdet
