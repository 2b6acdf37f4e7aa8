#include "palfm/oracle.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "palfm/error.hpp"

namespace palfm::oracle {
namespace {

void guard(std::string_view w) {
    if (w.size() > kMaxOracleLength) {
        throw usage_error("oracle input longer than " + std::to_string(kMaxOracleLength));
    }
}

// Suffix-palindrome lengths of w, ascending, the empty one included.
std::vector<std::uint32_t> suffix_palindrome_lengths(std::string_view w) {
    std::vector<std::uint32_t> out;
    for (std::size_t len = 0; len <= w.size(); ++len) {
        if (is_palindrome(w.substr(w.size() - len))) {
            out.push_back(static_cast<std::uint32_t>(len));
        }
    }
    return out;
}

std::vector<Group> partition(std::string_view prefix) {
    std::map<char, std::vector<std::uint32_t>> keyed;
    std::vector<Group> out;
    std::optional<Group> boundary;
    for (std::uint32_t len : suffix_palindrome_lengths(prefix)) {
        if (len == prefix.size()) {
            boundary = Group{std::nullopt, {len}, 0};
        } else {
            keyed[prefix[prefix.size() - len - 1]].push_back(len);
        }
    }
    for (auto& [key, lengths] : keyed) {
        out.push_back(Group{key, lengths, 0});
    }
    std::sort(out.begin(), out.end(), [](const Group& a, const Group& b) {
        return a.representative() < b.representative();
    });
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k].id = static_cast<std::uint32_t>(k + 1);
    }
    if (boundary) {
        out.push_back(*boundary);
    }
    return out;
}

}  // namespace

bool is_palindrome(std::string_view w) { return std::equal(w.begin(), w.end(), w.rbegin()); }

bool pal_match(std::string_view x, std::string_view y) {
    if (x.size() != y.size()) {
        throw usage_error("pal_match needs equal lengths");
    }
    guard(x);
    const std::size_t n = x.size();
    // pal[i][j]: x[i..j] and y[i..j] palindromic flags, filled by increasing length
    std::vector<std::vector<char>> px(n, std::vector<char>(n + 1, 1));
    std::vector<std::vector<char>> py(n, std::vector<char>(n + 1, 1));
    for (std::size_t len = 2; len <= n; ++len) {
        for (std::size_t i = 0; i + len <= n; ++i) {
            const std::size_t j = i + len - 1;
            const bool inner_x = len == 2 || px[i + 1][j - 1];
            const bool inner_y = len == 2 || py[i + 1][j - 1];
            px[i][j] = inner_x && x[i] == x[j];
            py[i][j] = inner_y && y[i] == y[j];
            if (px[i][j] != py[i][j]) {
                return false;
            }
        }
    }
    return true;
}

std::vector<std::uint32_t> maximal_palindromes_naive(std::string_view w) {
    guard(w);
    const std::size_t n = w.size();
    std::vector<std::uint32_t> out;
    for (std::size_t t = 2; t <= 2 * n; ++t) {
        // 1-based [i..j] with i + j = t, grown while both neighbours match
        std::size_t i = t % 2 == 0 ? t / 2 : (t + 1) / 2;
        std::size_t j = t % 2 == 0 ? t / 2 : (t - 1) / 2;
        while (i > 1 && j < n && w[i - 2] == w[j]) {
            --i;
            ++j;
        }
        out.push_back(static_cast<std::uint32_t>(j + 1 - i));
    }
    return out;
}

std::vector<std::uint32_t> lpal_naive(std::string_view w) {
    guard(w);
    std::vector<std::uint32_t> out;
    for (std::size_t i = 1; i <= w.size(); ++i) {
        out.push_back(suffix_palindrome_lengths(w.substr(0, i)).back());
    }
    return out;
}

std::vector<std::uint32_t> lpal_second_naive(std::string_view w) {
    guard(w);
    std::vector<std::uint32_t> out;
    for (std::size_t i = 1; i <= w.size(); ++i) {
        const auto lengths = suffix_palindrome_lengths(w.substr(0, i));
        out.push_back(lengths[lengths.size() - 2]);
    }
    return out;
}

std::vector<PalLength> ssp_naive(std::string_view w) {
    guard(w);
    std::vector<PalLength> out;
    for (std::size_t i = 1; i <= w.size(); ++i) {
        PalLength best = PalLength::inf();
        for (std::size_t len = 2; len <= i; ++len) {
            if (is_palindrome(w.substr(i - len, len))) {
                best = PalLength(static_cast<std::uint32_t>(len));
                break;
            }
        }
        out.push_back(best);
    }
    return out;
}

std::vector<PalLength> spp_naive(std::string_view w) {
    guard(w);
    std::vector<PalLength> out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        PalLength best = PalLength::inf();
        for (std::size_t len = 2; i + len <= w.size(); ++len) {
            if (is_palindrome(w.substr(i, len))) {
                best = PalLength(static_cast<std::uint32_t>(len));
                break;
            }
        }
        out.push_back(best);
    }
    return out;
}

GroupAnalysis groups_naive(std::string_view w) {
    guard(w);
    GroupAnalysis out;
    for (std::size_t j = 0; j <= w.size(); ++j) {
        out.partitions.push_back(partition(w.substr(0, j)));
    }
    for (std::size_t j = 1; j <= w.size(); ++j) {
        const auto& groups = out.partitions[j];
        out.gstar.push_back(static_cast<std::uint32_t>(
            std::count_if(groups.begin(), groups.end(), [](const Group& g) { return g.key.has_value(); })));
    }
    for (std::size_t i = 1; i <= w.size(); ++i) {
        SymbolCode id = SymbolCode::inf();
        for (const Group& g : out.partitions[i - 1]) {
            if (g.key && *g.key == w[i - 1]) {
                id = SymbolCode::group(g.id);
            }
        }
        out.sspg.push_back(id);
    }
    return out;
}

SymbolCode pi_naive(std::string_view w) {
    if (w.empty()) {
        throw usage_error("pi() of the empty string is undefined");
    }
    std::string rev(w.rbegin(), w.rend());
    return groups_naive(rev).sspg.back();
}

std::vector<std::size_t> naive_search(std::string_view text, std::string_view pattern) {
    if (pattern.empty()) {
        throw usage_error("empty pattern");
    }
    guard(text);
    std::vector<std::size_t> out;
    if (pattern.size() > text.size()) {
        return out;
    }
    for (std::size_t p = 0; p + pattern.size() <= text.size(); ++p) {
        if (pal_match(text.substr(p, pattern.size()), pattern)) {
            out.push_back(p + 1);
        }
    }
    return out;
}

}  // namespace palfm::oracle
