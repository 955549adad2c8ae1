#include "prmforge/error.hpp"

namespace prmforge {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::ReducibleModulus: return "ReducibleModulus";
        case ErrorKind::UnsupportedFieldSize: return "UnsupportedFieldSize";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::SizeOverflow: return "SizeOverflow";
        case ErrorKind::RankOutOfRange: return "RankOutOfRange";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::DegreeTooLarge: return "DegreeTooLarge";
        case ErrorKind::DegreeDivisible: return "DegreeDivisible";
        case ErrorKind::HypothesisViolated: return "HypothesisViolated";
        case ErrorKind::CacheCorrupt: return "CacheCorrupt";
        case ErrorKind::Parse: return "ParseError";
    }
    return "Unknown";
}

}  // namespace prmforge
