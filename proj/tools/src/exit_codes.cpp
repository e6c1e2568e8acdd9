#include "haan_cli/exit_codes.hpp"

namespace haan::cli {

int exit_code(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::InvalidInstance: return kInvalidInstance;
    case ErrorCode::InvalidAllocation: return kInvalidAllocation;
    case ErrorCode::InvalidConfig: return kInvalidConfig;
    case ErrorCode::InstanceInfeasible: return kInstanceInfeasible;
    case ErrorCode::WrongSolver: return kWrongSolver;
    case ErrorCode::BudgetExceeded: return kBudgetExceeded;
    case ErrorCode::Timeout: return kTimeout;
    case ErrorCode::NotACover: return kNotACover;
    case ErrorCode::SeparatorNotFound: return kSeparatorNotFound;
    case ErrorCode::UnknownAlgorithm: return kUnknownAlgorithm;
    case ErrorCode::NotRegular: return kNotRegular;
    case ErrorCode::Not3Regular: return kNot3Regular;
    case ErrorCode::BadK: return kBadK;
    case ErrorCode::BadT: return kBadT;
    case ErrorCode::NotAClique: return kNotAClique;
    case ErrorCode::BadPartition: return kBadPartition;
    case ErrorCode::ParseError: return kParseError;
    case ErrorCode::IoError: return kIoError;
    }
    return kInternal;
}

} // namespace haan::cli
