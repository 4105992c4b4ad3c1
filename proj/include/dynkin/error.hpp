#pragma once

#include <stdexcept>
#include <string>

namespace dynkin {

enum class ErrorCode {
    invalid_params,
    index_out_of_range,
    domain_error,
    order_violation,
    numeric_overflow,
    missing_grid,
    size_limit_exceeded,
    config_parse,
    empty_n_list,
    insufficient_n_list,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace dynkin
