#include "todim/phf.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "todim/errors.hpp"

namespace todim {

PhfElement::PhfElement(std::vector<PhfEntry> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw Error(ErrorKind::EmptyElement, "probabilistic hesitant element has no entries");
    for (const auto& e : entries_) {
        if (!(e.probability >= 0.0))
            throw Error(ErrorKind::NegativeProbability, "probability " + std::to_string(e.probability) + " is negative");
        if (!(e.degree >= 0.0))
            throw Error(ErrorKind::NegativeDegree, "degree " + std::to_string(e.degree) + " is negative");
    }
}

double PhfElement::probability_mass() const noexcept {
    return std::accumulate(entries_.begin(), entries_.end(), 0.0,
                           [](double acc, const PhfEntry& e) { return acc + e.probability; });
}

double PhfElement::max_degree() const noexcept {
    return std::max_element(entries_.begin(), entries_.end(),
                            [](const PhfEntry& a, const PhfEntry& b) { return a.degree < b.degree; })
        ->degree;
}

double PhfElement::min_degree() const noexcept {
    return std::min_element(entries_.begin(), entries_.end(),
                            [](const PhfEntry& a, const PhfEntry& b) { return a.degree < b.degree; })
        ->degree;
}

bool PhfElement::is_normalized() const noexcept {
    return std::abs(probability_mass() - 1.0) <= kProbabilityTolerance;
}

PhfElement normalize_probabilities(const PhfElement& e) {
    const double mass = e.probability_mass();
    if (mass > 1.0 + kProbabilityTolerance)
        throw Error(ErrorKind::ProbabilityMassExceedsOne,
                    "probabilities sum to " + std::to_string(mass) + ", which exceeds 1");
    if (!(mass > 0.0)) throw Error(ErrorKind::ZeroProbabilityMass, "probabilities sum to zero");

    std::vector<PhfEntry> out(e.entries().begin(), e.entries().end());
    for (auto& entry : out) entry.probability /= mass;
    return PhfElement(std::move(out));
}

PhfElement pad(const PhfElement& e, std::size_t target_count) {
    if (target_count < e.size())
        throw Error(ErrorKind::TargetTooSmall, "cannot pad " + std::to_string(e.size()) + " entries down to " +
                                                   std::to_string(target_count));
    std::vector<PhfEntry> out(e.entries().begin(), e.entries().end());
    out.resize(target_count, PhfEntry{e.max_degree(), 0.0});
    return PhfElement(std::move(out));
}

OrderedPhfElement order(const PhfElement& e, Direction direction) {
    std::vector<PhfEntry> out(e.entries().begin(), e.entries().end());
    auto ascending = [](const PhfEntry& a, const PhfEntry& b) {
        const double pa = a.product(), pb = b.product();
        if (pa != pb) return pa < pb;
        return a.degree < b.degree;
    };
    if (direction == Direction::Ascending)
        std::stable_sort(out.begin(), out.end(), ascending);
    else
        std::stable_sort(out.begin(), out.end(), [&](const PhfEntry& a, const PhfEntry& b) { return ascending(b, a); });
    return OrderedPhfElement(PhfElement(std::move(out)), direction);
}

namespace {

void require_normalized(const PhfElement& e) {
    if (!e.is_normalized())
        throw Error(ErrorKind::UnnormalizedProbabilities,
                    "probabilities sum to " + std::to_string(e.probability_mass()) + "; normalize first");
}

double unchecked_score(const PhfElement& e) {
    double s = 0.0;
    for (const auto& entry : e.entries()) s += entry.product();
    return s;
}

double unchecked_variance(const PhfElement& e) {
    const double mean = unchecked_score(e);
    double v = 0.0;
    for (const auto& entry : e.entries()) v += entry.probability * (entry.degree - mean) * (entry.degree - mean);
    return v;
}

}  // namespace

double score(const PhfElement& e) {
    require_normalized(e);
    return unchecked_score(e);
}

double variance(const PhfElement& e) {
    require_normalized(e);
    return unchecked_variance(e);
}

Ordering compare(const PhfElement& a, const PhfElement& b) {
    const double sa = score(a), sb = score(b);
    if (sa > sb + kTieTolerance) return Ordering::Greater;
    if (sb > sa + kTieTolerance) return Ordering::Less;
    const double va = variance(a), vb = variance(b);
    if (va + kTieTolerance < vb) return Ordering::Greater;
    if (vb + kTieTolerance < va) return Ordering::Less;
    return Ordering::Equal;
}

double distance(const PhfElement& a, const PhfElement& b, Direction direction, std::size_t width) {
    const std::size_t n = width == 0 ? std::max(a.size(), b.size()) : width;
    const auto lhs = order(pad(a, n), direction);
    const auto rhs = order(pad(b, n), direction);
    double sum = 0.0;
    for (std::size_t t = 0; t < n; ++t)
        sum += std::abs(lhs.entries()[t].product() - rhs.entries()[t].product());
    return sum / static_cast<double>(n);
}

}  // namespace todim
