#pragma once

// TODIM pipelines (probabilistic hesitant, hesitant, crisp): per-criterion
// prospect-shaped dominance, aggregation, overall dominance and ranking.

#include <cstddef>
#include <span>
#include <vector>

#include "todim/grid.hpp"
#include "todim/problem.hpp"
#include "todim/weighting.hpp"

namespace todim {

struct DominanceBreakdown {
    /// per_criterion[j](i, k) is the dominance of alternative i over k under criterion j.
    std::vector<Grid<double>> per_criterion;
    /// Σ_j per_criterion[j].
    Grid<double> aggregated;
    /// Row sums of `aggregated`.
    std::vector<double> sums;
};

struct RankingResult {
    /// Min-max normalized overall dominance, one per alternative.
    std::vector<double> overall;
    /// Alternative indices, best first; ties keep input order.
    std::vector<std::size_t> order;
    Method method = Method::Phf;
    double lambda = kDefaultLambda;

    friend bool operator==(const RankingResult&, const RankingResult&) = default;
};

struct Evaluation {
    WeightVector weights;
    DominanceBreakdown breakdown;
    RankingResult ranking;
};

struct EvaluateOptions {
    /// Compute the per-criterion matrices on separate threads. The result is
    /// bit-identical to the sequential path.
    bool parallel = false;
};

/// Prospect value of one comparison: sqrt(share·d) on a gain,
/// -(1/λ)·sqrt(d/share) on a loss, 0 when equal. `share` is ω_jr / Σω_jr.
double prospect_value(Ordering outcome, double distance, double share, double lambda);

/// A problem with normalized/padded cells and derived weights, ready to
/// answer single dominance queries.
class DominanceModel {
public:
    DominanceModel(const DecisionProblem& problem, Method method);
    DominanceModel(const DecisionProblem& problem, Method method, WeightVector weights);

    std::size_t alternatives() const noexcept { return n_; }
    std::size_t criteria() const noexcept { return m_; }
    const WeightVector& weights() const noexcept { return weights_; }

    /// Outcome of alternative i against k under criterion j, before the
    /// cost-criterion branch swap.
    Ordering outcome(std::size_t i, std::size_t k, std::size_t j) const;
    double distance(std::size_t i, std::size_t k, std::size_t j) const;
    double dominance(std::size_t i, std::size_t k, std::size_t j) const;
    Grid<double> criterion_matrix(std::size_t j) const;

private:
    void check_index(std::size_t i, std::size_t k, std::size_t j) const;

    Method method_;
    std::size_t n_ = 0;
    std::size_t m_ = 0;
    double lambda_ = kDefaultLambda;
    std::vector<CriterionKind> kinds_;
    WeightVector weights_;
    /// Per-criterion padding width: the largest element count in the column.
    std::vector<std::size_t> widths_;
    /// Probabilistic cells are stored normalized; crisp cells sign-flipped
    /// for cost criteria.
    Assessments cells_;
};

double phf_dominance(const DecisionProblem& problem, std::size_t i, std::size_t k, std::size_t j);
double hf_dominance(const DecisionProblem& problem, std::size_t i, std::size_t k, std::size_t j);
double crisp_dominance(const DecisionProblem& problem, std::size_t i, std::size_t k, std::size_t j);

Grid<double> aggregate(std::span<const Grid<double>> per_criterion);

/// Min-max normalization of the row sums; all ones when every sum ties.
RankingResult overall(const Grid<double>& aggregated, Method method, double lambda);

/// Runs the pipeline for `method`; throws ModeMismatch if the cells are of
/// another representation.
Evaluation evaluate(const DecisionProblem& problem, Method method, EvaluateOptions options = {});
Evaluation evaluate(const DecisionProblem& problem, EvaluateOptions options = {});

std::vector<RankingResult> sweep_lambda(const DecisionProblem& problem, Method method,
                                        std::span<const double> lambdas);

/// Adds `delta` to the derived raw weight of criterion `criterion` and
/// re-evaluates.
Evaluation perturb_weight(const DecisionProblem& problem, Method method, std::size_t criterion, double delta);

/// Batched form: one delta per criterion.
Evaluation perturb_weights(const DecisionProblem& problem, Method method, std::span<const double> deltas);

}  // namespace todim
