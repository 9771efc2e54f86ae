#include "dglcl/error.hpp"

namespace dglcl {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::EmptyVector: return "EmptyVector";
        case ErrorCode::NegativeEntry: return "NegativeEntry";
        case ErrorCode::SumNotOne: return "SumNotOne";
        case ErrorCode::SymbolOutOfRange: return "SymbolOutOfRange";
        case ErrorCode::AlphabetMismatch: return "AlphabetMismatch";
        case ErrorCode::DisjointSupport: return "DisjointSupport";
        case ErrorCode::FewerThanTwoHypotheses: return "FewerThanTwoHypotheses";
        case ErrorCode::BadIndex: return "BadIndex";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::BadPriors: return "BadPriors";
        case ErrorCode::NonpositiveDelta: return "NonpositiveDelta";
        case ErrorCode::BadParams: return "BadParams";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::InvalidGrid: return "InvalidGrid";
        case ErrorCode::Parse: return "Parse";
        case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

}  // namespace dglcl
