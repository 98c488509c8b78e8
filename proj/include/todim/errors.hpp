#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace todim {

enum class ErrorKind {
    EmptyElement,
    NegativeProbability,
    NegativeDegree,
    ProbabilityMassExceedsOne,
    ZeroProbabilityMass,
    UnnormalizedProbabilities,
    TargetTooSmall,
    NonPositiveWeight,
    NonPositiveLambda,
    TooFewAlternatives,
    IndexOutOfRange,
    ModeMismatch,
    SyntaxError,
    SchemaError,
    ValidationError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. `path` is a JSON pointer into the
/// problem document when the error can be attributed to a field.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message, std::string path = {});

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& path() const noexcept { return path_; }

private:
    ErrorKind kind_;
    std::string path_;
};

}  // namespace todim
