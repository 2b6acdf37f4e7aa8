#pragma once

#include <stdexcept>
#include <string>

namespace palfm {

/// A caller violated an operation's precondition (empty pattern, bad delta, ...).
class usage_error : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A rank/select/rmq query addressed positions outside the structure.
class query_range_error : public std::out_of_range {
  public:
    using std::out_of_range::out_of_range;
};

/// The text is longer than the explicit-sort construction accepts without an override.
class build_limit_error : public std::length_error {
  public:
    using std::length_error::length_error;
};

/// Reading or writing a file failed.
class io_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Raised while loading an index image.
class format_error : public std::runtime_error {
  public:
    enum class kind { bad_magic, version_mismatch, truncated, checksum_mismatch, malformed };

    format_error(kind k, const std::string& what) : std::runtime_error(what), kind_(k) {}

    kind error_kind() const noexcept { return kind_; }

  private:
    kind kind_;
};

const char* to_string(format_error::kind k) noexcept;

}  // namespace palfm
