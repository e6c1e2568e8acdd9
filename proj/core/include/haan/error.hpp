#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace haan {

/// Failure categories surfaced by the library. The CLI maps each one to a
/// stable process exit code (see tools/exit_codes.hpp).
enum class ErrorCode {
    InvalidInstance,
    InvalidAllocation,
    InvalidConfig,
    InstanceInfeasible,
    WrongSolver,
    BudgetExceeded,
    Timeout,
    NotACover,
    SeparatorNotFound,
    UnknownAlgorithm,
    NotRegular,
    Not3Regular,
    BadK,
    BadT,
    NotAClique,
    BadPartition,
    ParseError,
    IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace haan
