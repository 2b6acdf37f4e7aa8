#pragma once

// Linear-time palindromic-structure encodings of standalone strings.
//
// Texts are byte strings.  Every array returned here stores the value for
// 1-based position i at index i - 1.

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "palfm/types.hpp"

namespace palfm {

/// Radii of the maximal palindromes of a string, indexed by center code
/// t = i + j of the substring w[i..j], t in [2..2n].  Odd t are the
/// between-character centers and may hold length 0.
class MaximalPalindromes {
  public:
    MaximalPalindromes() = default;
    MaximalPalindromes(std::size_t text_length, std::vector<std::uint32_t> lengths);

    std::size_t text_length() const { return n_; }
    bool empty() const { return lengths_.empty(); }

    std::size_t first_center() const { return 2; }
    std::size_t last_center() const { return 2 * n_; }

    /// Length of the maximal palindrome at center t.
    std::uint32_t length(std::size_t t) const { return lengths_[t - 2]; }

    /// 1-based start / end of the maximal palindrome at center t.  For an
    /// empty palindrome start == end + 1.
    std::size_t start(std::size_t t) const { return (t - length(t) + 1) / 2; }
    std::size_t end(std::size_t t) const { return (t + length(t) - 1) / 2; }

    const std::vector<std::uint32_t>& lengths() const { return lengths_; }

  private:
    std::size_t n_ = 0;
    std::vector<std::uint32_t> lengths_;
};

/// Manacher's algorithm.
MaximalPalindromes maximal_palindromes(std::string_view w);

/// Longest suffix-palindrome of each prefix (always >= 1).
std::vector<std::uint32_t> lpal(std::string_view w);

/// Second-longest suffix-palindrome of each prefix, the empty palindrome
/// included (so the value may be 0).
std::vector<std::uint32_t> lpal_second(std::string_view w);

/// Shortest suffix-palindrome of length >= 2 of each prefix, or INF.
std::vector<PalLength> ssp(std::string_view w);

/// Shortest prefix-palindrome of length >= 2 starting at each position, or INF.
std::vector<PalLength> spp(std::string_view w);

/// Number of character-keyed suffix-pal-groups of each prefix w[..j].  The
/// whole-prefix palindrome (the boundary group) is not counted.
std::vector<std::uint32_t> group_counts(std::string_view w);

/// Identifier of the suffix-pal-group of w[..i-1] that w[i] extends, or INF.
std::vector<SymbolCode> sspg(std::string_view w);

/// Group identifier the shortest non-trivial prefix-palindrome of `w`
/// extends from, or INF.  Throws usage_error on an empty string.
SymbolCode pi(std::string_view w);

/// Backward-search inputs for a pattern P of length m:
///   pi[i-1]     = pi(P[i..])
///   groups[i-1] = character-keyed prefix-pal-groups of P[i+1..] (0 for i = m)
struct PatternProfile {
    std::vector<SymbolCode> pi;
    std::vector<std::uint32_t> groups;

    std::size_t size() const { return pi.size(); }
};

/// Throws usage_error on an empty pattern.
PatternProfile pattern_preprocess(std::string_view pattern);

}  // namespace palfm
