#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dglcl {

enum class ErrorCode {
    EmptyVector,
    NegativeEntry,
    SumNotOne,
    SymbolOutOfRange,
    AlphabetMismatch,
    DisjointSupport,
    FewerThanTwoHypotheses,
    BadIndex,
    LengthMismatch,
    BadPriors,
    NonpositiveDelta,
    BadParams,
    TooLarge,
    InvalidGrid,
    Parse,
    Io,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every library failure surfaces as this exception; code() identifies the contract violated.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace dglcl
