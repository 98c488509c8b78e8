#pragma once

// Probabilistic hesitant fuzzy elements: a multiset of membership degrees,
// each carrying an occurrence probability.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "todim/common.hpp"

namespace todim {

struct PhfEntry {
    double degree = 0.0;
    double probability = 0.0;

    double product() const noexcept { return degree * probability; }
    friend bool operator==(const PhfEntry&, const PhfEntry&) = default;
};

/// Non-empty multiset of (degree, probability) pairs with non-negative values.
/// The probabilities may sum to less than one until normalized.
class PhfElement {
public:
    explicit PhfElement(std::vector<PhfEntry> entries);
    PhfElement(std::initializer_list<PhfEntry> entries) : PhfElement(std::vector<PhfEntry>(entries)) {}

    std::span<const PhfEntry> entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    double probability_mass() const noexcept;
    double max_degree() const noexcept;
    double min_degree() const noexcept;
    bool is_normalized() const noexcept;

    friend bool operator==(const PhfElement&, const PhfElement&) = default;

private:
    std::vector<PhfEntry> entries_;
};

/// Element whose entries satisfy the ordered-element prerequisites: products
/// p·h monotone in `direction`, product ties broken by degree.
class OrderedPhfElement {
public:
    const PhfElement& element() const noexcept { return element_; }
    std::span<const PhfEntry> entries() const noexcept { return element_.entries(); }
    Direction direction() const noexcept { return direction_; }

private:
    friend OrderedPhfElement order(const PhfElement&, Direction);
    OrderedPhfElement(PhfElement e, Direction d) : element_(std::move(e)), direction_(d) {}

    PhfElement element_;
    Direction direction_;
};

/// Rescales a probability deficit so the mass sums to one. A surplus (Σp > 1)
/// is rejected.
PhfElement normalize_probabilities(const PhfElement& e);

/// Appends (max degree, 0) entries until `target_count` is reached.
PhfElement pad(const PhfElement& e, std::size_t target_count);

/// Stable sort by p·h, then by degree, in the given direction.
OrderedPhfElement order(const PhfElement& e, Direction direction);

double score(const PhfElement& e);
double variance(const PhfElement& e);

/// Score first; on a score tie the lower variance is the greater element.
Ordering compare(const PhfElement& a, const PhfElement& b);

/// Hamming distance between ordered elements. Both operands are padded to
/// `width` entries (0 means the larger of the two counts) and ordered in
/// `direction`; the sum of |p1·h1 - p2·h2| is divided by the width.
double distance(const PhfElement& a, const PhfElement& b, Direction direction = Direction::Ascending,
                std::size_t width = 0);

}  // namespace todim
