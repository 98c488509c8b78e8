#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "todim/hf.hpp"
#include "todim/phf.hpp"

namespace todim {

enum class Mode { Phf, Hf, Crisp };

/// One weight element per criterion; the alternative held decides the mode.
using WeightSpecification = std::variant<std::vector<PhfElement>, std::vector<HfElement>, std::vector<double>>;

Mode mode_of(const WeightSpecification& spec) noexcept;
std::size_t criterion_count(const WeightSpecification& spec) noexcept;

struct WeightVector {
    /// Per-criterion weight before sum-to-one normalization (element scores,
    /// or the crisp input).
    std::vector<double> raw;
    /// Normalized to sum to one in phf and crisp mode; equal to `raw` in hf mode.
    std::vector<double> weights;
    /// weights[j] / weights[reference_index].
    std::vector<double> relative;
    std::size_t reference_index = 0;
    double relative_sum = 0.0;
    std::vector<std::string> warnings;
};

/// Reference criterion is the maximum weight (lowest index on ties).
WeightVector relativize(std::span<const double> weights);

WeightVector derive_phf_weights(std::span<const PhfElement> elements);
WeightVector derive_hf_weights(std::span<const HfElement> elements);
WeightVector derive_crisp_weights(std::span<const double> weights);

WeightVector derive_weights(const WeightSpecification& spec);

/// Adds `deltas[j]` to each raw weight and rebuilds the vector the way the
/// mode would (normalize in phf/crisp mode, then relativize).
WeightVector perturb(const WeightVector& base, Mode mode, std::span<const double> deltas);

}  // namespace todim
