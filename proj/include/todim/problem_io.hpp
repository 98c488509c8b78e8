#pragma once

// *.todim.json documents: parsing with field-level errors, canonical
// serialization, and the bundled case-study fixtures.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "todim/problem.hpp"

namespace todim {

inline constexpr int kSchemaVersion = 1;

struct Metadata {
    std::optional<std::string> title;
    std::optional<std::string> author;
    std::vector<std::string> notes;

    bool empty() const noexcept { return !title && !author && notes.empty(); }
    friend bool operator==(const Metadata&, const Metadata&) = default;
};

struct ProblemDocument {
    int schema_version = kSchemaVersion;
    DecisionProblem problem;
    Metadata metadata;

    friend bool operator==(const ProblemDocument&, const ProblemDocument&) = default;
};

/// Probabilities are kept as written; normalization happens in the engine.
ProblemDocument parse_document(std::string_view text);
ProblemDocument document_from_json(const nlohmann::json& doc);
DecisionProblem parse(std::string_view text);

nlohmann::json to_json(const ProblemDocument& doc);
nlohmann::json to_json(const DecisionProblem& problem);

/// Canonical text: sorted keys, shortest round-trip numbers, trailing newline.
std::string serialize(const ProblemDocument& doc);
std::string serialize(const DecisionProblem& problem);

/// Deterministic layout used for every JSON output of the project: values
/// whose compact form fits on one line are kept inline, larger containers are
/// broken one element per line.
std::string format_json(const nlohmann::json& value);

namespace fixtures {

/// Four-project venture capital case study with probabilistic assessments.
std::string_view case_study_phf();
/// The same assessments without probabilities.
std::string_view case_study_hf();

}  // namespace fixtures

}  // namespace todim
