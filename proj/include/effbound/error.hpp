#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace effbound {

/// Failure categories raised by the library. The CLI reports them with
/// exit code 1, or 2 when they come from a malformed argument.
enum class Errc {
    SingularMatrix,
    RankMismatch,
    NonIntegralGenus,
    NotNefBig,
    NotBig,
    NotAmple,
    NotNegativeDefinite,
    NotConnected,
    ModelInconsistent,
    NoAmpleReference,
    NotPseudoEffectiveOrIncompleteModel,
    AmbiguousDecomposition,
    BoxExhausted,
    IntegralityFailure,
    NonpositiveX,
    NonpositiveInput,
    NonpositiveLP,
    UnverifiableHypothesis,
    ParseError,
    ValidationError,
    UnknownCurveName,
};

constexpr std::string_view errc_name(Errc code) noexcept
{
    switch (code) {
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::RankMismatch: return "RankMismatch";
    case Errc::NonIntegralGenus: return "NonIntegralGenus";
    case Errc::NotNefBig: return "NotNefBig";
    case Errc::NotBig: return "NotBig";
    case Errc::NotAmple: return "NotAmple";
    case Errc::NotNegativeDefinite: return "NotNegativeDefinite";
    case Errc::NotConnected: return "NotConnected";
    case Errc::ModelInconsistent: return "ModelInconsistent";
    case Errc::NoAmpleReference: return "NoAmpleReference";
    case Errc::NotPseudoEffectiveOrIncompleteModel: return "NotPseudoEffectiveOrIncompleteModel";
    case Errc::AmbiguousDecomposition: return "AmbiguousDecomposition";
    case Errc::BoxExhausted: return "BoxExhausted";
    case Errc::IntegralityFailure: return "IntegralityFailure";
    case Errc::NonpositiveX: return "NonpositiveX";
    case Errc::NonpositiveInput: return "NonpositiveInput";
    case Errc::NonpositiveLP: return "NonpositiveLP";
    case Errc::UnverifiableHypothesis: return "UnverifiableHypothesis";
    case Errc::ParseError: return "ParseError";
    case Errc::ValidationError: return "ValidationError";
    case Errc::UnknownCurveName: return "UnknownCurveName";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code)
    {
    }

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace effbound
