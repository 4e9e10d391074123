#include "sqdyn/error.hpp"

namespace sqdyn {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::EvenCharacteristic: return "EvenCharacteristic";
        case ErrorKind::ReducibleModulus: return "ReducibleModulus";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::MixedFields: return "MixedFields";
        case ErrorKind::NonSquare: return "NonSquare";
        case ErrorKind::DegreeBudgetExceeded: return "DegreeBudgetExceeded";
        case ErrorKind::BothZero: return "BothZero";
        case ErrorKind::ConstantInput: return "ConstantInput";
        case ErrorKind::DegreeTooSmall: return "DegreeTooSmall";
        case ErrorKind::ZeroA: return "ZeroA";
        case ErrorKind::SqrtDoesNotExist: return "SqrtDoesNotExist";
        case ErrorKind::RecurrenceDivisorVanishes: return "RecurrenceDivisorVanishes";
        case ErrorKind::ParityMismatch: return "ParityMismatch";
        case ErrorKind::DegreeMismatch: return "DegreeMismatch";
        case ErrorKind::NotPurelyPeriodic: return "NotPurelyPeriodic";
        case ErrorKind::NotTwoOrdinary: return "NotTwoOrdinary";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::Parse: return "Parse";
    }
    return "Unknown";
}

}  // namespace sqdyn
