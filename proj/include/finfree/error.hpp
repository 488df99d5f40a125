#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace finfree {

enum class ErrorCode {
    invalid_argument,
    degree_mismatch,
    not_monic,
    dimension_mismatch,
    out_of_range,
    singular_matrix,
    size_guard,
    unsupported_pair,
    malformed_json,
    io_error,
};

std::string_view to_string(ErrorCode code) noexcept;

// All library failures are reported through this type; the code is what the
// CLI surfaces as the machine-readable error string.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace finfree
