#pragma once

// Plain hesitant fuzzy elements (degrees without probabilities).

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "todim/common.hpp"

namespace todim {

class HfElement {
public:
    explicit HfElement(std::vector<double> degrees);
    HfElement(std::initializer_list<double> degrees) : HfElement(std::vector<double>(degrees)) {}

    std::span<const double> degrees() const noexcept { return degrees_; }
    std::size_t size() const noexcept { return degrees_.size(); }
    double max_degree() const noexcept;

    friend bool operator==(const HfElement&, const HfElement&) = default;

private:
    std::vector<double> degrees_;
};

/// Arithmetic mean of the degrees.
double hf_score(const HfElement& e);

/// (1/n)·sqrt(Σ(h - mean)²).
double hf_variance(const HfElement& e);

/// Mean first, lower hf_variance wins a tie. Must be applied to unpadded
/// elements: optimistic padding moves the mean.
Ordering hf_compare(const HfElement& a, const HfElement& b);

/// Appends copies of the maximum degree.
HfElement hf_pad(const HfElement& e, std::size_t target_count);

/// Mean absolute difference of the ascending-sorted degrees after padding
/// both to `width` (0 means the larger of the two counts).
double hf_distance(const HfElement& a, const HfElement& b, std::size_t width = 0);

}  // namespace todim
