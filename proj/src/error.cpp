#include "k3acm/error.hpp"

namespace k3acm {

std::string_view errc_name(Errc code) noexcept
{
    switch (code) {
    case Errc::NonSymmetric: return "NonSymmetric";
    case Errc::BadDimensions: return "BadDimensions";
    case Errc::DuplicateLabels: return "DuplicateLabels";
    case Errc::OddK3Diagonal: return "OddK3Diagonal";
    case Errc::WrongSignature: return "WrongSignature";
    case Errc::NonPositiveAmple: return "NonPositiveAmple";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::DegenerateForm: return "DegenerateForm";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::Overflow: return "Overflow";
    case Errc::OddSquare: return "OddSquare";
    case Errc::UnsupportedRank: return "UnsupportedRank";
    case Errc::BadParameters: return "BadParameters";
    case Errc::NegativeDimension: return "NegativeDimension";
    case Errc::ConflictingAssumptions: return "ConflictingAssumptions";
    case Errc::TrivialClass: return "TrivialClass";
    case Errc::NotEffectiveCandidate: return "NotEffectiveCandidate";
    case Errc::NotAcmInput: return "NotAcmInput";
    case Errc::BoxTooSmall: return "BoxTooSmall";
    case Errc::MalformedScript: return "MalformedScript";
    case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace k3acm
