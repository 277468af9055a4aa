#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace k3acm {

enum class Errc {
    NonSymmetric,
    BadDimensions,
    DuplicateLabels,
    OddK3Diagonal,
    WrongSignature,
    NonPositiveAmple,
    DimensionMismatch,
    DegenerateForm,
    PreconditionViolated,
    Overflow,
    OddSquare,
    UnsupportedRank,
    BadParameters,
    NegativeDimension,
    ConflictingAssumptions,
    TrivialClass,
    NotEffectiveCandidate,
    NotAcmInput,
    BoxTooSmall,
    MalformedScript,
    ParseError,
};

std::string_view errc_name(Errc code) noexcept;

// Single exception type for the library; the code identifies the failed contract.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace k3acm
