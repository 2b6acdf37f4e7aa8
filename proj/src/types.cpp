#include "palfm/types.hpp"

#include <stdexcept>

#include "palfm/error.hpp"

namespace palfm {

std::uint32_t PalLength::value() const {
    if (is_inf()) {
        throw std::domain_error("PalLength::value() on infinity");
    }
    return raw_;
}

SymbolCode SymbolCode::group(std::uint32_t id) {
    if (id == 0 || id == kInfRaw) {
        throw std::domain_error("group identifiers start at 1");
    }
    return SymbolCode(id);
}

std::uint32_t SymbolCode::group_id() const {
    if (!is_group()) {
        throw std::domain_error("SymbolCode::group_id() on " + to_string(*this));
    }
    return raw_;
}

std::uint32_t SymbolCode::code(std::uint32_t max_group) const {
    if (is_inf()) {
        return max_group + 1;
    }
    if (raw_ > max_group) {
        throw std::domain_error("group id exceeds alphabet bound");
    }
    return raw_;
}

SymbolCode SymbolCode::from_code(std::uint32_t code, std::uint32_t max_group) {
    if (code == 0) {
        return dollar();
    }
    if (code == max_group + 1) {
        return inf();
    }
    if (code > max_group + 1) {
        throw std::domain_error("code outside alphabet");
    }
    return SymbolCode(code);
}

std::string to_string(PalLength v) {
    return v.is_inf() ? std::string("inf") : std::to_string(v.value());
}

std::string to_string(SymbolCode c) {
    if (c.is_dollar()) {
        return "$";
    }
    if (c.is_inf()) {
        return "inf";
    }
    return std::to_string(c.group_id());
}

std::ostream& operator<<(std::ostream& os, PalLength v) { return os << to_string(v); }
std::ostream& operator<<(std::ostream& os, SymbolCode c) { return os << to_string(c); }

const char* to_string(format_error::kind k) noexcept {
    switch (k) {
        case format_error::kind::bad_magic:
            return "bad magic";
        case format_error::kind::version_mismatch:
            return "version mismatch";
        case format_error::kind::truncated:
            return "truncated image";
        case format_error::kind::checksum_mismatch:
            return "checksum mismatch";
        case format_error::kind::malformed:
            return "malformed image";
    }
    return "unknown";
}

}  // namespace palfm
