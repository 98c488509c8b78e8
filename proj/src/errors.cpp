#include "todim/errors.hpp"

namespace todim {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::EmptyElement: return "EmptyElement";
        case ErrorKind::NegativeProbability: return "NegativeProbability";
        case ErrorKind::NegativeDegree: return "NegativeDegree";
        case ErrorKind::ProbabilityMassExceedsOne: return "ProbabilityMassExceedsOne";
        case ErrorKind::ZeroProbabilityMass: return "ZeroProbabilityMass";
        case ErrorKind::UnnormalizedProbabilities: return "UnnormalizedProbabilities";
        case ErrorKind::TargetTooSmall: return "TargetTooSmall";
        case ErrorKind::NonPositiveWeight: return "NonPositiveWeight";
        case ErrorKind::NonPositiveLambda: return "NonPositiveLambda";
        case ErrorKind::TooFewAlternatives: return "TooFewAlternatives";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::ModeMismatch: return "ModeMismatch";
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::SchemaError: return "SchemaError";
        case ErrorKind::ValidationError: return "ValidationError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message, std::string path)
    : std::runtime_error(message), kind_(kind), path_(std::move(path)) {}

}  // namespace todim
