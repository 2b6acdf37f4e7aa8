#pragma once

// Brute-force ground truth for the encodings and for pal-matching search.
// Nothing here shares code with palcore or the index; every function works
// straight from the definitions and refuses inputs longer than
// kMaxOracleLength.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "palfm/types.hpp"

namespace palfm::oracle {

inline constexpr std::size_t kMaxOracleLength = 2000;

bool is_palindrome(std::string_view w);

/// True iff every window [i..j], i < j, is a palindrome in both or neither.
/// Throws usage_error when the lengths differ.
bool pal_match(std::string_view x, std::string_view y);

std::vector<std::uint32_t> maximal_palindromes_naive(std::string_view w);
std::vector<std::uint32_t> lpal_naive(std::string_view w);
std::vector<std::uint32_t> lpal_second_naive(std::string_view w);
std::vector<PalLength> ssp_naive(std::string_view w);
std::vector<PalLength> spp_naive(std::string_view w);

/// One suffix-pal-group of a prefix.
struct Group {
    std::optional<char> key;               ///< left neighbour; empty for the boundary group
    std::vector<std::uint32_t> lengths;    ///< members, ascending
    std::uint32_t id = 0;                  ///< 0 for the boundary group

    std::uint32_t representative() const { return lengths.front(); }
};

struct GroupAnalysis {
    /// partitions[j] lists the groups of w[..j] for j in [0..n], character-keyed
    /// groups first in identifier order, then the boundary group if any.
    std::vector<std::vector<Group>> partitions;
    std::vector<std::uint32_t> gstar;  ///< gstar[j-1] for j in [1..n]
    std::vector<SymbolCode> sspg;
};

GroupAnalysis groups_naive(std::string_view w);

/// pi(w) = sspg(reverse w) at |w|.
SymbolCode pi_naive(std::string_view w);

/// Sorted 1-based start positions p with T[p..p+m-1] pal-matching P.
std::vector<std::size_t> naive_search(std::string_view text, std::string_view pattern);

}  // namespace palfm::oracle
