#include "todim/weighting.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "todim/errors.hpp"

namespace todim {

Mode mode_of(const WeightSpecification& spec) noexcept {
    switch (spec.index()) {
        case 0: return Mode::Phf;
        case 1: return Mode::Hf;
        default: return Mode::Crisp;
    }
}

std::size_t criterion_count(const WeightSpecification& spec) noexcept {
    return std::visit([](const auto& v) { return v.size(); }, spec);
}

WeightVector relativize(std::span<const double> weights) {
    if (weights.empty()) throw Error(ErrorKind::ValidationError, "no criterion weights");
    WeightVector out;
    out.weights.assign(weights.begin(), weights.end());
    out.raw = out.weights;
    for (std::size_t j = 0; j < weights.size(); ++j) {
        if (!(weights[j] > 0.0))
            throw Error(ErrorKind::NonPositiveWeight,
                        "weight of criterion " + std::to_string(j) + " is " + std::to_string(weights[j]));
        if (weights[j] > weights[out.reference_index]) out.reference_index = j;
    }
    const double ref = weights[out.reference_index];
    out.relative.reserve(weights.size());
    for (double w : weights) out.relative.push_back(w / ref);
    // exact 1 for the reference criterion, independent of rounding in w / w
    out.relative[out.reference_index] = 1.0;
    out.relative_sum = std::accumulate(out.relative.begin(), out.relative.end(), 0.0);
    return out;
}

namespace {

std::vector<double> normalized(std::span<const double> raw) {
    const double total = std::accumulate(raw.begin(), raw.end(), 0.0);
    std::vector<double> out;
    out.reserve(raw.size());
    for (double w : raw) out.push_back(w / total);
    return out;
}

void warn_if_upper_bounds_exceed_one(double sum_of_max, std::vector<std::string>& warnings) {
    if (sum_of_max > 1.0 + kProbabilityTolerance) {
        std::ostringstream msg;
        msg << "sum of the largest possible criterion weights is " << sum_of_max
            << " (> 1); weights were renormalized";
        warnings.push_back(msg.str());
    }
}

}  // namespace

WeightVector derive_phf_weights(std::span<const PhfElement> elements) {
    std::vector<double> raw;
    raw.reserve(elements.size());
    double sum_of_max = 0.0;
    for (const auto& e : elements) {
        raw.push_back(score(normalize_probabilities(e)));
        sum_of_max += e.max_degree();
    }
    for (std::size_t j = 0; j < raw.size(); ++j)
        if (!(raw[j] > 0.0))
            throw Error(ErrorKind::NonPositiveWeight, "weight of criterion " + std::to_string(j) + " scores zero");
    auto out = relativize(normalized(raw));
    out.raw = std::move(raw);
    warn_if_upper_bounds_exceed_one(sum_of_max, out.warnings);
    return out;
}

WeightVector derive_hf_weights(std::span<const HfElement> elements) {
    std::vector<double> raw;
    raw.reserve(elements.size());
    double sum_of_max = 0.0;
    for (const auto& e : elements) {
        raw.push_back(hf_score(e));
        sum_of_max += e.max_degree();
    }
    auto out = relativize(raw);
    warn_if_upper_bounds_exceed_one(sum_of_max, out.warnings);
    return out;
}

WeightVector derive_crisp_weights(std::span<const double> weights) {
    for (std::size_t j = 0; j < weights.size(); ++j)
        if (!(weights[j] > 0.0))
            throw Error(ErrorKind::NonPositiveWeight,
                        "weight of criterion " + std::to_string(j) + " is " + std::to_string(weights[j]));
    const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    auto out = relativize(normalized(weights));
    out.raw.assign(weights.begin(), weights.end());
    if (std::abs(total - 1.0) > kProbabilityTolerance) {
        std::ostringstream msg;
        msg << "crisp weights sum to " << total << "; renormalized to 1";
        out.warnings.push_back(msg.str());
    }
    return out;
}

WeightVector derive_weights(const WeightSpecification& spec) {
    switch (mode_of(spec)) {
        case Mode::Phf: return derive_phf_weights(std::get<0>(spec));
        case Mode::Hf: return derive_hf_weights(std::get<1>(spec));
        case Mode::Crisp: return derive_crisp_weights(std::get<2>(spec));
    }
    throw Error(ErrorKind::ValidationError, "unknown weight mode");
}

WeightVector perturb(const WeightVector& base, Mode mode, std::span<const double> deltas) {
    if (deltas.size() != base.raw.size())
        throw Error(ErrorKind::IndexOutOfRange, "expected " + std::to_string(base.raw.size()) + " weight deltas, got " +
                                                    std::to_string(deltas.size()));
    std::vector<double> raw = base.raw;
    for (std::size_t j = 0; j < raw.size(); ++j) {
        raw[j] += deltas[j];
        if (!(raw[j] > 0.0))
            throw Error(ErrorKind::NonPositiveWeight,
                        "perturbed weight of criterion " + std::to_string(j) + " is " + std::to_string(raw[j]),
                        "/problem/weights/" + std::to_string(j));
    }
    auto out = mode == Mode::Hf ? relativize(raw) : relativize(normalized(raw));
    out.raw = std::move(raw);
    return out;
}

}  // namespace todim
