#include "dseries/error.hpp"

namespace dseries {

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidCartan: return "InvalidCartan";
        case ErrorKind::NotFiniteType: return "NotFiniteType";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::GroupTooLarge: return "GroupTooLarge";
        case ErrorKind::IncompleteAssignment: return "IncompleteAssignment";
        case ErrorKind::NotAntidominant: return "NotAntidominant";
        case ErrorKind::NotIntegral: return "NotIntegral";
        case ErrorKind::NotStronglyAntidominant: return "NotStronglyAntidominant";
        case ErrorKind::NotCompatible: return "NotCompatible";
        case ErrorKind::CollapseAmbiguous: return "CollapseAmbiguous";
        case ErrorKind::ParameterIncompatible: return "ParameterIncompatible";
        case ErrorKind::TruncationTooSmall: return "TruncationTooSmall";
        case ErrorKind::InvalidConfig: return "InvalidConfig";
        case ErrorKind::Overflow: return "Overflow";
        case ErrorKind::InternalInvariant: return "InternalInvariant";
    }
    return "Unknown";
}

long long checked_add(long long a, long long b) {
    long long out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        throw Error(ErrorKind::Overflow, "integer overflow in addition");
    }
    return out;
}

long long checked_mul(long long a, long long b) {
    long long out = 0;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw Error(ErrorKind::Overflow, "integer overflow in multiplication");
    }
    return out;
}

}  // namespace dseries
