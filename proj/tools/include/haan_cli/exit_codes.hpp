#pragma once

#include "haan/error.hpp"

namespace haan::cli {

/// Process exit codes. Values are part of the CLI contract and never change.
enum ExitCode : int {
    kOk = 0,
    kUsage = 2,
    kInvalidInstance = 10,
    kInvalidAllocation = 11,
    kInvalidConfig = 12,
    kInstanceInfeasible = 13,
    kWrongSolver = 14,
    kBudgetExceeded = 15,
    kTimeout = 16,
    kNotACover = 17,
    kSeparatorNotFound = 18,
    kUnknownAlgorithm = 19,
    kNotRegular = 20,
    kNot3Regular = 21,
    kBadK = 22,
    kBadT = 23,
    kNotAClique = 24,
    kBadPartition = 25,
    kParseError = 26,
    kIoError = 27,
    kBenchDisagreement = 30,
    kInternal = 70,
};

int exit_code(ErrorCode code) noexcept;

} // namespace haan::cli
