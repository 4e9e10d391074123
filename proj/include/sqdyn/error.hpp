#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sqdyn {

enum class ErrorKind {
    NotPrime,
    EvenCharacteristic,
    ReducibleModulus,
    DivisionByZero,
    MixedFields,
    NonSquare,
    DegreeBudgetExceeded,
    BothZero,
    ConstantInput,
    DegreeTooSmall,
    ZeroA,
    SqrtDoesNotExist,
    RecurrenceDivisorVanishes,
    ParityMismatch,
    DegreeMismatch,
    NotPurelyPeriodic,
    NotTwoOrdinary,
    BudgetExceeded,
    InvalidArgument,
    Parse,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the named kinds above so
/// callers (and the CLI) can react to the condition rather than the message.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace sqdyn
