#include "palfm/palcore.hpp"

#include <algorithm>
#include <cstddef>
#include <limits>
#include <string>

#include "palfm/error.hpp"

namespace palfm {
namespace {

constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();

// Right end of the maximal palindrome at center t for t in [2..2n+1];
// t = 2n + 1 is the empty palindrome after the last character.
std::size_t reach(const MaximalPalindromes& mp, std::size_t t) {
    return t == 2 * mp.text_length() + 1 ? mp.text_length() : mp.end(t);
}

struct SuffixPalindromes {
    std::vector<std::uint32_t> longest;
    std::vector<std::uint32_t> second;
};

// The longest suffix-palindrome ending at i is the truncation of the maximal
// palindrome with the smallest center that reaches i; the second longest
// comes from the next center that reaches i.  Both centers only move right.
SuffixPalindromes suffix_palindromes(const MaximalPalindromes& mp) {
    const std::size_t n = mp.text_length();
    SuffixPalindromes out{std::vector<std::uint32_t>(n), std::vector<std::uint32_t>(n)};
    std::size_t t1 = 2;
    std::size_t t2 = 3;
    for (std::size_t i = 1; i <= n; ++i) {
        while (reach(mp, t1) < i) {
            ++t1;
        }
        t2 = std::max(t2, t1 + 1);
        while (reach(mp, t2) < i) {
            ++t2;
        }
        out.longest[i - 1] = static_cast<std::uint32_t>(2 * i + 1 - t1);
        out.second[i - 1] = static_cast<std::uint32_t>(2 * i + 1 - t2);
    }
    return out;
}

std::vector<std::uint32_t> ssp_raw(const SuffixPalindromes& sp) {
    const std::size_t n = sp.longest.size();
    std::vector<std::uint32_t> out(n, kInf);
    for (std::size_t i = 1; i <= n; ++i) {
        const std::uint32_t longest = sp.longest[i - 1];
        const std::uint32_t second = sp.second[i - 1];
        if (longest == 1) {
            out[i - 1] = kInf;
        } else if (second <= 1) {
            out[i - 1] = longest;
        } else {
            // the shortest one is also a suffix of the mirrored copy of the
            // second-longest palindrome, which ends earlier
            out[i - 1] = out[i - longest + second - 1];
        }
    }
    return out;
}

std::vector<std::uint32_t> ssp_raw(std::string_view w) {
    return ssp_raw(suffix_palindromes(maximal_palindromes(w)));
}

std::vector<std::uint32_t> spp_raw(std::string_view w) {
    std::string rev(w.rbegin(), w.rend());
    auto out = ssp_raw(rev);
    std::reverse(out.begin(), out.end());
    return out;
}

std::vector<PalLength> to_lengths(const std::vector<std::uint32_t>& raw) {
    std::vector<PalLength> out;
    out.reserve(raw.size());
    for (auto v : raw) {
        out.push_back(v == kInf ? PalLength::inf() : PalLength(v));
    }
    return out;
}

// Everything the group computations need about one string.
struct Encodings {
    MaximalPalindromes mp;
    SuffixPalindromes sp;
    std::vector<std::uint32_t> ssp;
    std::vector<std::uint32_t> spp;
};

Encodings encode(std::string_view w) {
    Encodings e;
    e.mp = maximal_palindromes(w);
    e.sp = suffix_palindromes(e.mp);
    e.ssp = ssp_raw(e.sp);
    e.spp = spp_raw(w);
    return e;
}

// A maximal palindrome w[i..j] with i >= 2 is the representative (shortest
// member) of its group iff no prefix-palindrome starting at i-1 fits inside
// w[i-1..j].
bool is_representative(const Encodings& e, std::size_t i, std::size_t j) {
    return e.spp[i - 2] > j - i + 2;
}

std::vector<std::uint32_t> group_counts(const Encodings& e) {
    const std::size_t n = e.mp.text_length();
    std::vector<std::uint32_t> out(n, 0);
    if (n == 0) {
        return out;
    }
    for (std::size_t t = e.mp.first_center(); t <= e.mp.last_center(); ++t) {
        const std::size_t i = e.mp.start(t);
        const std::size_t j = e.mp.end(t);
        if (i >= 2 && is_representative(e, i, j)) {
            ++out[j - 1];
        }
    }
    for (std::size_t j = 1; j < n; ++j) {
        if (e.sp.longest[j] > 1) {
            ++out[j - 1];
        }
    }
    // the empty suffix after the last character is maximal by the boundary
    ++out[n - 1];
    return out;
}

std::vector<SymbolCode> sspg(const Encodings& e) {
    const std::size_t n = e.mp.text_length();
    std::vector<std::uint32_t> shorter(n, 0);
    for (std::size_t t = e.mp.first_center(); t <= e.mp.last_center(); ++t) {
        const std::size_t i = e.mp.start(t);
        const std::size_t j = e.mp.end(t);
        if (i < 2 || j >= n) {
            continue;
        }
        const std::uint32_t next = e.ssp[j];
        if (next == kInf) {
            continue;
        }
        const std::size_t len = j + 1 - i;
        if (len + 1 < next && is_representative(e, i, j)) {
            ++shorter[j - 1];
        }
    }
    std::vector<SymbolCode> out(n, SymbolCode::inf());
    for (std::size_t p = 2; p <= n; ++p) {
        if (e.ssp[p - 1] != kInf) {
            out[p - 1] = SymbolCode::group(shorter[p - 2] + 1);
        }
    }
    return out;
}

}  // namespace

MaximalPalindromes::MaximalPalindromes(std::size_t text_length, std::vector<std::uint32_t> lengths)
    : n_(text_length), lengths_(std::move(lengths)) {}

MaximalPalindromes maximal_palindromes(std::string_view w) {
    const auto n = static_cast<std::ptrdiff_t>(w.size());
    if (n == 0) {
        return {};
    }
    std::vector<std::ptrdiff_t> odd(n);
    std::vector<std::ptrdiff_t> even(n);
    for (std::ptrdiff_t i = 0, l = 0, r = -1; i < n; ++i) {
        std::ptrdiff_t k = i > r ? 1 : std::min(odd[l + r - i], r - i + 1);
        while (i - k >= 0 && i + k < n && w[i - k] == w[i + k]) {
            ++k;
        }
        odd[i] = k--;
        if (i + k > r) {
            l = i - k;
            r = i + k;
        }
    }
    for (std::ptrdiff_t i = 0, l = 0, r = -1; i < n; ++i) {
        std::ptrdiff_t k = i > r ? 0 : std::min(even[l + r - i + 1], r - i + 1);
        while (i - k - 1 >= 0 && i + k < n && w[i - k - 1] == w[i + k]) {
            ++k;
        }
        even[i] = k--;
        if (i + k > r) {
            l = i - k - 1;
            r = i + k;
        }
    }
    // odd center at 0-based i has t = 2i + 2; the gap before 0-based i has t = 2i + 1
    std::vector<std::uint32_t> lengths(2 * n - 1);
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        lengths[2 * i] = static_cast<std::uint32_t>(2 * odd[i] - 1);
        if (i > 0) {
            lengths[2 * i - 1] = static_cast<std::uint32_t>(2 * even[i]);
        }
    }
    return MaximalPalindromes(w.size(), std::move(lengths));
}

std::vector<std::uint32_t> lpal(std::string_view w) {
    return suffix_palindromes(maximal_palindromes(w)).longest;
}

std::vector<std::uint32_t> lpal_second(std::string_view w) {
    return suffix_palindromes(maximal_palindromes(w)).second;
}

std::vector<PalLength> ssp(std::string_view w) { return to_lengths(ssp_raw(w)); }

std::vector<PalLength> spp(std::string_view w) { return to_lengths(spp_raw(w)); }

std::vector<std::uint32_t> group_counts(std::string_view w) { return group_counts(encode(w)); }

std::vector<SymbolCode> sspg(std::string_view w) { return sspg(encode(w)); }

SymbolCode pi(std::string_view w) {
    if (w.empty()) {
        throw usage_error("pi() of the empty string is undefined");
    }
    std::string rev(w.rbegin(), w.rend());
    return sspg(rev).back();
}

PatternProfile pattern_preprocess(std::string_view pattern) {
    if (pattern.empty()) {
        throw usage_error("empty pattern");
    }
    const std::size_t m = pattern.size();
    std::string rev(pattern.rbegin(), pattern.rend());
    const Encodings e = encode(rev);
    const auto ids = sspg(e);
    const auto counts = group_counts(e);

    PatternProfile profile;
    profile.pi.reserve(m);
    profile.groups.reserve(m);
    for (std::size_t i = 1; i <= m; ++i) {
        profile.pi.push_back(ids[m - i]);
        profile.groups.push_back(i == m ? 0 : counts[m - i - 1]);
    }
    return profile;
}

}  // namespace palfm
