#include "todim/engine.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <string>

#include "todim/errors.hpp"

namespace todim {

double prospect_value(Ordering outcome, double distance, double share, double lambda) {
    switch (outcome) {
        case Ordering::Greater: return std::sqrt(share * distance);
        case Ordering::Less: return -std::sqrt(distance / share) / lambda;
        case Ordering::Equal: return 0.0;
    }
    return 0.0;
}

namespace {

void check_method(const DecisionProblem& p, Method method) {
    if (mode_for(method) != mode_of(p))
        throw Error(ErrorKind::ModeMismatch, "method " + std::string(to_string(method)) +
                                                 " cannot evaluate a problem with " +
                                                 std::string(to_string(mode_of(p))) + " assessments");
}

Ordering crisp_outcome(double lhs, double rhs) {
    const double diff = lhs - rhs;
    if (diff > kTieTolerance) return Ordering::Greater;
    if (diff < -kTieTolerance) return Ordering::Less;
    return Ordering::Equal;
}

}  // namespace

DominanceModel::DominanceModel(const DecisionProblem& problem, Method method)
    : DominanceModel(problem, method, [&] {
          validate(problem);
          return derive_weights(problem.weights);
      }()) {}

DominanceModel::DominanceModel(const DecisionProblem& problem, Method method, WeightVector weights)
    : method_(method),
      n_(problem.alternatives.size()),
      m_(problem.criteria.size()),
      lambda_(problem.lambda),
      weights_(std::move(weights)),
      widths_(m_, 1) {
    validate(problem);
    check_method(problem, method);
    if (weights_.relative.size() != m_)
        throw Error(ErrorKind::ValidationError, "weight vector does not match the criteria");
    kinds_.reserve(m_);
    for (const auto& c : problem.criteria) kinds_.push_back(c.kind);

    if (const auto* phf = std::get_if<Grid<PhfElement>>(&problem.assessments)) {
        std::vector<PhfElement> cells;
        cells.reserve(phf->cells().size());
        for (const auto& e : phf->cells()) cells.push_back(normalize_probabilities(e));
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < m_; ++j) widths_[j] = std::max(widths_[j], (*phf)(i, j).size());
        cells_ = Grid<PhfElement>(n_, m_, std::move(cells));
    } else if (const auto* hf = std::get_if<Grid<HfElement>>(&problem.assessments)) {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < m_; ++j) widths_[j] = std::max(widths_[j], (*hf)(i, j).size());
        cells_ = *hf;
    } else {
        Grid<double> crisp = std::get<Grid<double>>(problem.assessments);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < m_; ++j)
                if (kinds_[j] == CriterionKind::Cost) crisp(i, j) = -crisp(i, j);
        cells_ = std::move(crisp);
    }
}

void DominanceModel::check_index(std::size_t i, std::size_t k, std::size_t j) const {
    if (i >= n_ || k >= n_ || j >= m_)
        throw Error(ErrorKind::IndexOutOfRange, "dominance index (" + std::to_string(i) + ", " + std::to_string(k) +
                                                    ", " + std::to_string(j) + ") is out of range");
}

Ordering DominanceModel::outcome(std::size_t i, std::size_t k, std::size_t j) const {
    check_index(i, k, j);
    switch (method_) {
        case Method::Phf: {
            const auto& cells = std::get<Grid<PhfElement>>(cells_);
            return compare(cells(i, j), cells(k, j));
        }
        case Method::Hf: {
            const auto& cells = std::get<Grid<HfElement>>(cells_);
            return hf_compare(cells(i, j), cells(k, j));
        }
        case Method::Classical: {
            const auto& cells = std::get<Grid<double>>(cells_);
            return crisp_outcome(cells(i, j), cells(k, j));
        }
    }
    return Ordering::Equal;
}

double DominanceModel::distance(std::size_t i, std::size_t k, std::size_t j) const {
    check_index(i, k, j);
    switch (method_) {
        case Method::Phf: {
            const auto& cells = std::get<Grid<PhfElement>>(cells_);
            return todim::distance(cells(i, j), cells(k, j), Direction::Ascending, widths_[j]);
        }
        case Method::Hf: {
            const auto& cells = std::get<Grid<HfElement>>(cells_);
            return hf_distance(cells(i, j), cells(k, j), widths_[j]);
        }
        case Method::Classical: {
            const auto& cells = std::get<Grid<double>>(cells_);
            return std::abs(cells(i, j) - cells(k, j));
        }
    }
    return 0.0;
}

double DominanceModel::dominance(std::size_t i, std::size_t k, std::size_t j) const {
    check_index(i, k, j);
    if (i == k) return 0.0;
    Ordering result = outcome(i, k, j);
    if (result == Ordering::Equal) return 0.0;
    // Crisp cost criteria are already negated; the fuzzy pipelines swap the
    // gain and loss branches instead.
    if (kinds_[j] == CriterionKind::Cost && method_ != Method::Classical) result = reverse(result);
    const double share = weights_.relative[j] / weights_.relative_sum;
    return prospect_value(result, distance(i, k, j), share, lambda_);
}

Grid<double> DominanceModel::criterion_matrix(std::size_t j) const {
    Grid<double> out(n_, n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t k = 0; k < n_; ++k)
            if (i != k) out(i, k) = dominance(i, k, j);
    return out;
}

double phf_dominance(const DecisionProblem& problem, std::size_t i, std::size_t k, std::size_t j) {
    return DominanceModel(problem, Method::Phf).dominance(i, k, j);
}

double hf_dominance(const DecisionProblem& problem, std::size_t i, std::size_t k, std::size_t j) {
    return DominanceModel(problem, Method::Hf).dominance(i, k, j);
}

double crisp_dominance(const DecisionProblem& problem, std::size_t i, std::size_t k, std::size_t j) {
    return DominanceModel(problem, Method::Classical).dominance(i, k, j);
}

Grid<double> aggregate(std::span<const Grid<double>> per_criterion) {
    if (per_criterion.empty()) return {};
    const std::size_t n = per_criterion.front().rows();
    Grid<double> out(n, n, 0.0);
    for (const auto& matrix : per_criterion) {
        if (matrix.rows() != n || matrix.cols() != n)
            throw Error(ErrorKind::ValidationError, "per-criterion dominance matrices differ in size");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) out(i, k) += matrix(i, k);
    }
    return out;
}

RankingResult overall(const Grid<double>& aggregated, Method method, double lambda) {
    const std::size_t n = aggregated.rows();
    if (n < 2) throw Error(ErrorKind::TooFewAlternatives, "ranking needs at least two alternatives");

    std::vector<double> sums(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (double v : aggregated.row(i)) sums[i] += v;
    const auto [lo, hi] = std::minmax_element(sums.begin(), sums.end());
    const double min = *lo, max = *hi;

    RankingResult out;
    out.method = method;
    out.lambda = lambda;
    out.overall.resize(n, 1.0);
    if (max > min)
        for (std::size_t i = 0; i < n; ++i) out.overall[i] = (sums[i] - min) / (max - min);

    out.order.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.order[i] = i;
    std::stable_sort(out.order.begin(), out.order.end(),
                     [&](std::size_t a, std::size_t b) { return out.overall[a] > out.overall[b]; });
    return out;
}

namespace {

Evaluation run(const DominanceModel& model, Method method, double lambda, EvaluateOptions options) {
    const std::size_t m = model.criteria();

    Evaluation out;
    out.weights = model.weights();
    out.breakdown.per_criterion.resize(m);
    if (options.parallel && m > 1) {
        std::vector<std::future<Grid<double>>> jobs;
        jobs.reserve(m);
        for (std::size_t j = 0; j < m; ++j)
            jobs.push_back(std::async(std::launch::async, [&model, j] { return model.criterion_matrix(j); }));
        for (std::size_t j = 0; j < m; ++j) out.breakdown.per_criterion[j] = jobs[j].get();
    } else {
        for (std::size_t j = 0; j < m; ++j) out.breakdown.per_criterion[j] = model.criterion_matrix(j);
    }

    // summation order is fixed (criterion 0..m-1, then k = 0..n-1)
    out.breakdown.aggregated = aggregate(out.breakdown.per_criterion);
    out.ranking = overall(out.breakdown.aggregated, method, lambda);
    const std::size_t n = model.alternatives();
    out.breakdown.sums.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (double v : out.breakdown.aggregated.row(i)) out.breakdown.sums[i] += v;
    return out;
}

}  // namespace

Evaluation evaluate(const DecisionProblem& problem, Method method, EvaluateOptions options) {
    return run(DominanceModel(problem, method), method, problem.lambda, options);
}

Evaluation evaluate(const DecisionProblem& problem, EvaluateOptions options) {
    return evaluate(problem, method_for(mode_of(problem)), options);
}

std::vector<RankingResult> sweep_lambda(const DecisionProblem& problem, Method method,
                                        std::span<const double> lambdas) {
    if (lambdas.empty()) throw Error(ErrorKind::ValidationError, "no lambda values to sweep", "/lambdas");
    for (std::size_t t = 0; t < lambdas.size(); ++t)
        if (!(lambdas[t] > 0.0) || !std::isfinite(lambdas[t]))
            throw Error(ErrorKind::NonPositiveLambda, "lambda " + std::to_string(lambdas[t]) + " is not positive",
                        "/lambdas/" + std::to_string(t));

    std::vector<RankingResult> out;
    out.reserve(lambdas.size());
    DecisionProblem copy = problem;
    for (double lambda : lambdas) {
        copy.lambda = lambda;
        out.push_back(evaluate(copy, method).ranking);
    }
    return out;
}

Evaluation perturb_weights(const DecisionProblem& problem, Method method, std::span<const double> deltas) {
    validate(problem);
    check_method(problem, method);
    const auto base = derive_weights(problem.weights);
    auto weights = perturb(base, mode_of(problem.weights), deltas);
    weights.warnings = base.warnings;
    return run(DominanceModel(problem, method, std::move(weights)), method, problem.lambda, {});
}

Evaluation perturb_weight(const DecisionProblem& problem, Method method, std::size_t criterion, double delta) {
    const std::size_t m = problem.criteria.size();
    if (criterion >= m)
        throw Error(ErrorKind::IndexOutOfRange,
                    "criterion " + std::to_string(criterion) + " is out of range (" + std::to_string(m) + " criteria)",
                    "/criterion");
    std::vector<double> deltas(m, 0.0);
    deltas[criterion] = delta;
    return perturb_weights(problem, method, deltas);
}

}  // namespace todim
