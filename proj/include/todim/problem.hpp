#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "todim/grid.hpp"
#include "todim/hf.hpp"
#include "todim/phf.hpp"
#include "todim/weighting.hpp"

namespace todim {

inline constexpr double kDefaultLambda = 2.25;

enum class CriterionKind { Benefit, Cost };

struct Criterion {
    std::string name;
    CriterionKind kind = CriterionKind::Benefit;

    friend bool operator==(const Criterion&, const Criterion&) = default;
};

/// Alternatives × criteria matrix; every cell shares one representation.
using Assessments = std::variant<Grid<PhfElement>, Grid<HfElement>, Grid<double>>;

struct DecisionProblem {
    std::vector<std::string> alternatives;
    std::vector<Criterion> criteria;
    Assessments assessments;
    WeightSpecification weights;
    /// Attenuation factor of losses.
    double lambda = kDefaultLambda;

    friend bool operator==(const DecisionProblem&, const DecisionProblem&) = default;
};

enum class Method { Phf, Hf, Classical };

Mode mode_of(const Assessments& a) noexcept;
Mode mode_of(const DecisionProblem& p) noexcept;
Method method_for(Mode mode) noexcept;
Mode mode_for(Method method) noexcept;

std::string_view to_string(Method m) noexcept;
std::string_view to_string(Mode m) noexcept;
std::string_view to_string(CriterionKind k) noexcept;

/// Throws on an unknown name (ValidationError).
Method parse_method(std::string_view name);
CriterionKind parse_criterion_kind(std::string_view name);

/// Dimension, mode-agreement and range checks. Errors carry document paths.
void validate(const DecisionProblem& p);

/// Hesitant twin of a probabilistic problem: probabilities dropped, degree
/// multisets kept in input order (assessments and weights).
DecisionProblem strip_probabilities(const DecisionProblem& p);

}  // namespace todim
