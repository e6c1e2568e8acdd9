#include "haan/error.hpp"

namespace haan {

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::InvalidInstance: return "InvalidInstance";
    case ErrorCode::InvalidAllocation: return "InvalidAllocation";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::InstanceInfeasible: return "InstanceInfeasible";
    case ErrorCode::WrongSolver: return "WrongSolver";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::Timeout: return "Timeout";
    case ErrorCode::NotACover: return "NotACover";
    case ErrorCode::SeparatorNotFound: return "SeparatorNotFound";
    case ErrorCode::UnknownAlgorithm: return "UnknownAlgorithm";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::Not3Regular: return "Not3Regular";
    case ErrorCode::BadK: return "BadK";
    case ErrorCode::BadT: return "BadT";
    case ErrorCode::NotAClique: return "NotAClique";
    case ErrorCode::BadPartition: return "BadPartition";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

} // namespace haan
