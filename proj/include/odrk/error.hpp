#pragma once

#include <stdexcept>
#include <string>

namespace odrk {

enum class ErrorCode {
    empty_query,
    no_repositories,
    unreachable,
    protocol_error,
    invalid_handle,
    not_found,
    range_unsupported,
    no_such_file,
    io_failure,
    unsupported_pair,
    encoding_error,
    ragged_row,
    empty_input,
    duplicate_header,
    not_tabular,
    empty_log,
    non_positive_time,
    malformed_response,
    bind_failure,
    config_error,
    invalid_argument,
};

const char* to_string(ErrorCode code);

/// Exception type used across the toolkit. Carries a stable error code so
/// callers (and the CLI) can branch without parsing message text.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace odrk
