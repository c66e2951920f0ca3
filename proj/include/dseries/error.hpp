#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dseries {

enum class ErrorKind {
    InvalidCartan,
    NotFiniteType,
    DimensionMismatch,
    GroupTooLarge,
    IncompleteAssignment,
    NotAntidominant,
    NotIntegral,
    NotStronglyAntidominant,
    NotCompatible,
    CollapseAmbiguous,
    ParameterIncompatible,
    TruncationTooSmall,
    InvalidConfig,
    Overflow,
    InternalInvariant,
};

std::string_view error_kind_name(ErrorKind kind);

/// Exception carrying a machine-readable kind. Everything the library throws
/// on bad input or a violated precondition is an Error.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }
    std::string_view kind_name() const { return error_kind_name(kind_); }

private:
    ErrorKind kind_;
};

/// Adds with an overflow check. Multiplicities and coefficients are int64;
/// silently wrapping would make every downstream identity meaningless.
long long checked_add(long long a, long long b);
long long checked_mul(long long a, long long b);

}  // namespace dseries
