#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace denergy {

enum class Errc {
    SelfLoop,
    DuplicateEdge,
    VertexOutOfRange,
    EmptyEdgeSet,
    InfeasibleSpec,
    GenerationExhausted,
    NoConvergence,
    NumericalAnomaly,
    BadLength,
    KindMismatch,
    InapplicableMap,
    NegativeDiscriminant,
    NegativeEigenvalue,
    MissingInput,
    NotApplicable,
    BoundsViolated,
    RefinementInapplicable,
    ParseError,
    InvalidArgument,
};

constexpr std::string_view to_string(Errc code) noexcept
{
    switch (code) {
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::VertexOutOfRange: return "VertexOutOfRange";
    case Errc::EmptyEdgeSet: return "EmptyEdgeSet";
    case Errc::InfeasibleSpec: return "InfeasibleSpec";
    case Errc::GenerationExhausted: return "GenerationExhausted";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::NumericalAnomaly: return "NumericalAnomaly";
    case Errc::BadLength: return "BadLength";
    case Errc::KindMismatch: return "KindMismatch";
    case Errc::InapplicableMap: return "InapplicableMap";
    case Errc::NegativeDiscriminant: return "NegativeDiscriminant";
    case Errc::NegativeEigenvalue: return "NegativeEigenvalue";
    case Errc::MissingInput: return "MissingInput";
    case Errc::NotApplicable: return "NotApplicable";
    case Errc::BoundsViolated: return "BoundsViolated";
    case Errc::RefinementInapplicable: return "RefinementInapplicable";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(message), code_(code)
    {
    }

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace denergy
