#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

namespace palfm {

/// A palindrome length that may be infinite.  Every finite value orders
/// before infinity.
class PalLength {
  public:
    constexpr PalLength() = default;
    constexpr explicit PalLength(std::uint32_t value) : raw_(value) {}

    static constexpr PalLength inf() { return PalLength(kInfRaw, raw_tag{}); }

    constexpr bool is_inf() const { return raw_ == kInfRaw; }
    constexpr bool is_finite() const { return raw_ != kInfRaw; }

    /// Finite length; throws std::domain_error on infinity.
    std::uint32_t value() const;

    friend constexpr auto operator<=>(PalLength, PalLength) = default;

  private:
    struct raw_tag {};
    static constexpr std::uint32_t kInfRaw = std::numeric_limits<std::uint32_t>::max();
    constexpr PalLength(std::uint32_t raw, raw_tag) : raw_(raw) {}

    std::uint32_t raw_ = 0;
};

/// Symbol of the F/L sequences: DOLLAR < group 1 < group 2 < ... < INF.
class SymbolCode {
  public:
    static constexpr SymbolCode dollar() { return SymbolCode(0); }
    static SymbolCode group(std::uint32_t id);
    static constexpr SymbolCode inf() { return SymbolCode(kInfRaw); }

    constexpr bool is_dollar() const { return raw_ == 0; }
    constexpr bool is_inf() const { return raw_ == kInfRaw; }
    constexpr bool is_group() const { return !is_dollar() && !is_inf(); }

    /// Group identifier (>= 1); throws std::domain_error for DOLLAR and INF.
    std::uint32_t group_id() const;

    /// Dense integer code for an alphabet whose largest group id is `max_group`:
    /// DOLLAR -> 0, group k -> k, INF -> max_group + 1.
    std::uint32_t code(std::uint32_t max_group) const;
    static SymbolCode from_code(std::uint32_t code, std::uint32_t max_group);

    friend constexpr auto operator<=>(SymbolCode, SymbolCode) = default;

  private:
    static constexpr std::uint32_t kInfRaw = std::numeric_limits<std::uint32_t>::max();
    constexpr explicit SymbolCode(std::uint32_t raw) : raw_(raw) {}

    std::uint32_t raw_;
};

/// "inf" for infinity, the decimal value otherwise.
std::string to_string(PalLength v);
/// "$", "inf", or the decimal group id.
std::string to_string(SymbolCode c);

std::ostream& operator<<(std::ostream& os, PalLength v);
std::ostream& operator<<(std::ostream& os, SymbolCode c);

}  // namespace palfm
