#include "finfree/error.hpp"

namespace finfree {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::invalid_argument: return "invalid_argument";
        case ErrorCode::degree_mismatch: return "degree_mismatch";
        case ErrorCode::not_monic: return "not_monic";
        case ErrorCode::dimension_mismatch: return "dimension_mismatch";
        case ErrorCode::out_of_range: return "out_of_range";
        case ErrorCode::singular_matrix: return "singular_matrix";
        case ErrorCode::size_guard: return "size_guard";
        case ErrorCode::unsupported_pair: return "unsupported_pair";
        case ErrorCode::malformed_json: return "malformed_json";
        case ErrorCode::io_error: return "io_error";
    }
    return "unknown";
}

}  // namespace finfree
