#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "palfm/types.hpp"

namespace palfm::test {

inline constexpr std::uint32_t I = std::numeric_limits<std::uint32_t>::max();

inline std::vector<PalLength> lengths(std::initializer_list<std::uint32_t> values) {
    std::vector<PalLength> out;
    for (std::uint32_t v : values) {
        out.push_back(v == I ? PalLength::inf() : PalLength(v));
    }
    return out;
}

// 0 is $, I is INF, anything else a group id.
inline std::vector<SymbolCode> symbols(std::initializer_list<std::uint32_t> values) {
    std::vector<SymbolCode> out;
    for (std::uint32_t v : values) {
        out.push_back(v == 0 ? SymbolCode::dollar() : v == I ? SymbolCode::inf() : SymbolCode::group(v));
    }
    return out;
}

inline std::string random_text(std::mt19937_64& rng, std::size_t n, int sigma) {
    std::uniform_int_distribution<int> pick(0, sigma - 1);
    std::string s(n, 'a');
    for (char& c : s) {
        c = static_cast<char>('a' + pick(rng));
    }
    return s;
}

}  // namespace palfm::test
