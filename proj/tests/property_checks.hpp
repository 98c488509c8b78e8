#pragma once

// Randomized invariant checks shared by the unit suite and the acceptance
// binary. Each check returns the number of cases tried and a description of
// every violation.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "todim/engine.hpp"
#include "unit/support.hpp"

namespace properties {

struct Report {
    std::size_t cases = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
    void fail(std::size_t trial, const std::string& what) {
        if (failures.size() < 20) failures.push_back("trial " + std::to_string(trial) + ": " + what);
    }
};

inline constexpr std::size_t kProblems = 1000;

inline std::vector<todim::DecisionProblem> random_problems(std::uint64_t seed, std::size_t count = kProblems) {
    std::mt19937_64 rng(seed);
    std::vector<todim::DecisionProblem> out;
    for (std::size_t t = 0; t < count; ++t) out.push_back(testing_support::random_phf_problem(rng));
    return out;
}

inline todim::DecisionProblem scale_assessments(const todim::DecisionProblem& p, double c) {
    auto out = p;
    const auto& cells = std::get<todim::Grid<todim::PhfElement>>(p.assessments);
    std::vector<todim::PhfElement> scaled;
    for (const auto& e : cells.cells()) {
        std::vector<todim::PhfEntry> entries(e.entries().begin(), e.entries().end());
        for (auto& x : entries) x.degree *= c;
        scaled.emplace_back(std::move(entries));
    }
    out.assessments = todim::Grid<todim::PhfElement>(cells.rows(), cells.cols(), std::move(scaled));
    return out;
}

/// Distance symmetry, identity, non-negativity and direction consistency
/// for both element kinds.
inline Report distance_axioms(std::uint64_t seed, std::size_t count = kProblems) {
    std::mt19937_64 rng(seed);
    Report r;
    for (std::size_t t = 0; t < count; ++t, ++r.cases) {
        const auto a = todim::normalize_probabilities(testing_support::random_phf(rng));
        const auto b = todim::normalize_probabilities(testing_support::random_phf(rng));
        if (todim::distance(a, a) != 0.0) r.fail(t, "phf d(a, a) != 0");
        const double ab = todim::distance(a, b), ba = todim::distance(b, a);
        if (ab != ba) r.fail(t, "phf d(a, b) != d(b, a)");
        if (ab < 0.0) r.fail(t, "phf distance negative");
        if (std::abs(todim::distance(a, b, todim::Direction::Descending) - ab) > 1e-12)
            r.fail(t, "phf distance depends on direction");

        const auto x = testing_support::random_hf(rng);
        const auto y = testing_support::random_hf(rng);
        if (todim::hf_distance(x, x) != 0.0) r.fail(t, "hf d(a, a) != 0");
        if (todim::hf_distance(x, y) != todim::hf_distance(y, x)) r.fail(t, "hf d(a, b) != d(b, a)");
    }
    return r;
}

/// Score and variance are unchanged by padding with zero-probability entries.
inline Report padding_neutrality(std::uint64_t seed, std::size_t count = kProblems) {
    std::mt19937_64 rng(seed);
    Report r;
    for (std::size_t t = 0; t < count; ++t, ++r.cases) {
        const auto e = todim::normalize_probabilities(testing_support::random_phf(rng));
        for (std::size_t width = e.size(); width <= 6; ++width) {
            const auto p = todim::pad(e, width);
            if (todim::score(p) != todim::score(e)) r.fail(t, "score changed by padding to " + std::to_string(width));
            if (todim::variance(p) != todim::variance(e))
                r.fail(t, "variance changed by padding to " + std::to_string(width));
        }
    }
    return r;
}

/// sign(ϑ(i,k)) = -sign(ϑ(k,i)) and ϑ(i,k)·ϑ(k,i) = -d/λ for every
/// criterion, under both the probabilistic and the hesitant pipelines.
inline Report dominance_identities(const std::vector<todim::DecisionProblem>& problems) {
    Report r;
    auto check = [&](std::size_t t, const todim::DecisionProblem& p, todim::Method method) {
        todim::DominanceModel model(p, method);
        for (std::size_t j = 0; j < model.criteria(); ++j)
            for (std::size_t i = 0; i < model.alternatives(); ++i)
                for (std::size_t k = i + 1; k < model.alternatives(); ++k) {
                    const double ik = model.dominance(i, k, j), ki = model.dominance(k, i, j);
                    const double d = model.distance(i, k, j);
                    const bool equal = model.outcome(i, k, j) == todim::Ordering::Equal;
                    if ((ik > 0) != (ki < 0) || (ik < 0) != (ki > 0)) r.fail(t, "sign antisymmetry");
                    if (equal) {
                        if (ik != 0.0 || ki != 0.0) r.fail(t, "equal outcome with non-zero dominance");
                        continue;
                    }
                    const double expected = -d / p.lambda;
                    if (std::abs(ik * ki - expected) > 1e-9 * std::abs(expected)) {
                        std::ostringstream msg;
                        msg << "product " << ik * ki << " vs " << expected;
                        r.fail(t, msg.str());
                    }
                }
    };
    for (std::size_t t = 0; t < problems.size(); ++t, ++r.cases) {
        check(t, problems[t], todim::Method::Phf);
        check(t, todim::strip_probabilities(problems[t]), todim::Method::Hf);
    }
    return r;
}

/// Orders agree unless two overall values are within `tie` of each other.
inline bool orders_agree(const todim::RankingResult& a, const todim::RankingResult& b, double tie) {
    if (a.order == b.order) return true;
    for (std::size_t t = 0; t + 1 < a.order.size(); ++t)
        if (std::abs(a.overall[a.order[t]] - a.overall[a.order[t + 1]]) <= tie) return true;
    return false;
}

/// Multiplying every assessment degree by c leaves O and the order unchanged.
inline Report scale_invariance(const std::vector<todim::DecisionProblem>& problems) {
    Report r;
    for (std::size_t t = 0; t < problems.size(); ++t, ++r.cases) {
        const auto base = todim::evaluate(problems[t], todim::Method::Phf).ranking;
        for (double c : {0.01, 1.0, 100.0}) {
            const auto scaled = todim::evaluate(scale_assessments(problems[t], c), todim::Method::Phf).ranking;
            for (std::size_t i = 0; i < base.overall.size(); ++i)
                if (std::abs(base.overall[i] - scaled.overall[i]) > 1e-9) {
                    std::ostringstream msg;
                    msg << "O[" << i << "] " << base.overall[i] << " vs " << scaled.overall[i] << " at c=" << c;
                    r.fail(t, msg.str());
                }
            if (!orders_agree(base, scaled, 1e-9)) r.fail(t, "order changed at c=" + std::to_string(c));
        }
    }
    return r;
}

/// Singleton probabilistic problems evaluate like their crisp counterparts.
inline Report crisp_reduction(std::uint64_t seed, std::size_t count = kProblems) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Report r;
    for (std::size_t t = 0; t < count; ++t, ++r.cases) {
        auto fuzzy = testing_support::random_phf_problem(rng);
        const std::size_t n = fuzzy.alternatives.size(), m = fuzzy.criteria.size();
        std::vector<todim::PhfElement> cells;
        std::vector<double> values;
        for (std::size_t c = 0; c < n * m; ++c) {
            values.push_back(unit(rng));
            cells.push_back(todim::PhfElement{{values.back(), 1.0}});
        }
        std::vector<todim::PhfElement> weights;
        std::vector<double> crisp_weights;
        for (std::size_t j = 0; j < m; ++j) {
            crisp_weights.push_back(0.05 + unit(rng));
            weights.push_back(todim::PhfElement{{crisp_weights.back(), 1.0}});
        }
        fuzzy.assessments = todim::Grid<todim::PhfElement>(n, m, std::move(cells));
        fuzzy.weights = std::move(weights);
        auto crisp = fuzzy;
        crisp.assessments = todim::Grid<double>(n, m, std::move(values));
        crisp.weights = std::move(crisp_weights);

        const auto a = todim::evaluate(fuzzy, todim::Method::Phf);
        const auto b = todim::evaluate(crisp, todim::Method::Classical);
        for (std::size_t i = 0; i < n; ++i) {
            if (std::abs(a.ranking.overall[i] - b.ranking.overall[i]) > 1e-9) r.fail(t, "overall dominance differs");
            for (std::size_t k = 0; k < n; ++k)
                if (std::abs(a.breakdown.aggregated(i, k) - b.breakdown.aggregated(i, k)) > 1e-9)
                    r.fail(t, "aggregated dominance differs");
        }
        if (!orders_agree(a.ranking, b.ranking, 1e-9)) r.fail(t, "order differs");
    }
    return r;
}

/// Reordering the alternatives permutes O accordingly.
inline Report permutation_equivariance(const std::vector<todim::DecisionProblem>& problems, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Report r;
    for (std::size_t t = 0; t < problems.size(); ++t, ++r.cases) {
        const auto& p = problems[t];
        const auto& cells = std::get<todim::Grid<todim::PhfElement>>(p.assessments);
        const std::size_t n = cells.rows(), m = cells.cols();
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        auto q = p;
        q.alternatives.clear();
        std::vector<todim::PhfElement> moved;
        for (std::size_t i = 0; i < n; ++i) {
            q.alternatives.push_back(p.alternatives[perm[i]]);
            for (std::size_t j = 0; j < m; ++j) moved.push_back(cells(perm[i], j));
        }
        q.assessments = todim::Grid<todim::PhfElement>(n, m, std::move(moved));
        const auto a = todim::evaluate(p, todim::Method::Phf).ranking;
        const auto b = todim::evaluate(q, todim::Method::Phf).ranking;
        for (std::size_t i = 0; i < n; ++i)
            if (std::abs(a.overall[perm[i]] - b.overall[i]) > 1e-9) r.fail(t, "overall dominance not permuted");
    }
    return r;
}

}  // namespace properties
