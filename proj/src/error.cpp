#include "dynkin/error.hpp"

namespace dynkin {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::invalid_params: return "invalid-params";
        case ErrorCode::index_out_of_range: return "index-out-of-range";
        case ErrorCode::domain_error: return "domain-error";
        case ErrorCode::order_violation: return "order-violation";
        case ErrorCode::numeric_overflow: return "numeric-overflow";
        case ErrorCode::missing_grid: return "missing-grid";
        case ErrorCode::size_limit_exceeded: return "size-limit-exceeded";
        case ErrorCode::config_parse: return "config-parse";
        case ErrorCode::empty_n_list: return "empty-n-list";
        case ErrorCode::insufficient_n_list: return "insufficient-n-list";
    }
    return "unknown";
}

}  // namespace dynkin
