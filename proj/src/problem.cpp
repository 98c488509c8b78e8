#include "todim/problem.hpp"

#include <cmath>
#include <set>

#include "todim/errors.hpp"

namespace todim {

Mode mode_of(const Assessments& a) noexcept {
    switch (a.index()) {
        case 0: return Mode::Phf;
        case 1: return Mode::Hf;
        default: return Mode::Crisp;
    }
}

Mode mode_of(const DecisionProblem& p) noexcept { return mode_of(p.assessments); }

Method method_for(Mode mode) noexcept {
    switch (mode) {
        case Mode::Phf: return Method::Phf;
        case Mode::Hf: return Method::Hf;
        case Mode::Crisp: return Method::Classical;
    }
    return Method::Classical;
}

Mode mode_for(Method method) noexcept {
    switch (method) {
        case Method::Phf: return Mode::Phf;
        case Method::Hf: return Mode::Hf;
        case Method::Classical: return Mode::Crisp;
    }
    return Mode::Crisp;
}

std::string_view to_string(Method m) noexcept {
    switch (m) {
        case Method::Phf: return "phf";
        case Method::Hf: return "hf";
        case Method::Classical: return "classical";
    }
    return "?";
}

std::string_view to_string(Mode m) noexcept {
    switch (m) {
        case Mode::Phf: return "phf";
        case Mode::Hf: return "hf";
        case Mode::Crisp: return "crisp";
    }
    return "?";
}

std::string_view to_string(CriterionKind k) noexcept { return k == CriterionKind::Benefit ? "benefit" : "cost"; }

Method parse_method(std::string_view name) {
    if (name == "phf") return Method::Phf;
    if (name == "hf") return Method::Hf;
    if (name == "classical" || name == "crisp") return Method::Classical;
    throw Error(ErrorKind::ValidationError, "unknown method '" + std::string(name) + "' (expected phf, hf or classical)");
}

CriterionKind parse_criterion_kind(std::string_view name) {
    if (name == "benefit") return CriterionKind::Benefit;
    if (name == "cost") return CriterionKind::Cost;
    throw Error(ErrorKind::ValidationError,
                "unknown criterion kind '" + std::string(name) + "' (expected benefit or cost)");
}

namespace {

std::string cell_path(std::size_t i, std::size_t j) {
    return "/problem/assessments/" + std::to_string(i) + "/" + std::to_string(j);
}

void check_mass(const PhfElement& e, const std::string& path) {
    const double mass = e.probability_mass();
    if (mass > 1.0 + kProbabilityTolerance)
        throw Error(ErrorKind::ProbabilityMassExceedsOne, "probabilities sum to " + std::to_string(mass) + " (> 1)",
                    path);
    if (!(mass > 0.0)) throw Error(ErrorKind::ZeroProbabilityMass, "probabilities sum to zero", path);
}

}  // namespace

void validate(const DecisionProblem& p) {
    const std::size_t n = p.alternatives.size();
    const std::size_t m = p.criteria.size();
    if (n == 0) throw Error(ErrorKind::ValidationError, "no alternatives", "/problem/alternatives");
    if (m == 0) throw Error(ErrorKind::ValidationError, "no criteria", "/problem/criteria");

    std::set<std::string> seen;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& name = p.alternatives[i];
        const auto path = "/problem/alternatives/" + std::to_string(i);
        if (name.empty()) throw Error(ErrorKind::ValidationError, "alternative name is empty", path);
        if (!seen.insert(name).second)
            throw Error(ErrorKind::ValidationError, "duplicate alternative '" + name + "'", path);
    }

    std::visit(
        [&](const auto& grid) {
            if (grid.rows() != n || grid.cols() != m)
                throw Error(ErrorKind::ValidationError,
                            "assessment matrix is " + std::to_string(grid.rows()) + "x" + std::to_string(grid.cols()) +
                                ", expected " + std::to_string(n) + "x" + std::to_string(m),
                            "/problem/assessments");
        },
        p.assessments);

    if (criterion_count(p.weights) != m)
        throw Error(ErrorKind::ValidationError,
                    "expected " + std::to_string(m) + " weights, got " + std::to_string(criterion_count(p.weights)),
                    "/problem/weights");
    if (mode_of(p.weights) != mode_of(p.assessments))
        throw Error(ErrorKind::ValidationError,
                    std::string("weights are ") + std::string(to_string(mode_of(p.weights))) +
                        " elements but assessments are " + std::string(to_string(mode_of(p.assessments))),
                    "/problem/weights");

    if (!(p.lambda > 0.0) || !std::isfinite(p.lambda))
        throw Error(ErrorKind::NonPositiveLambda, "lambda must be a positive finite number", "/problem/lambda");

    if (const auto* cells = std::get_if<Grid<PhfElement>>(&p.assessments)) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j) check_mass((*cells)(i, j), cell_path(i, j));
        const auto& w = std::get<std::vector<PhfElement>>(p.weights);
        for (std::size_t j = 0; j < m; ++j) check_mass(w[j], "/problem/weights/" + std::to_string(j));
    } else if (const auto* crisp = std::get_if<Grid<double>>(&p.assessments)) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j)
                if (!std::isfinite((*crisp)(i, j)))
                    throw Error(ErrorKind::ValidationError, "assessment is not finite", cell_path(i, j));
    }

    std::visit(
        [&](const auto& weights) {
            using T = std::decay_t<decltype(weights)>;
            if constexpr (std::is_same_v<T, std::vector<double>>) {
                for (std::size_t j = 0; j < m; ++j)
                    if (!(weights[j] > 0.0) || !std::isfinite(weights[j]))
                        throw Error(ErrorKind::NonPositiveWeight, "crisp weight must be positive",
                                    "/problem/weights/" + std::to_string(j));
            } else {
                for (std::size_t j = 0; j < m; ++j)
                    if (!(weights[j].max_degree() > 0.0))
                        throw Error(ErrorKind::NonPositiveWeight, "weight element has no positive degree",
                                    "/problem/weights/" + std::to_string(j));
            }
        },
        p.weights);
}

DecisionProblem strip_probabilities(const DecisionProblem& p) {
    const auto* cells = std::get_if<Grid<PhfElement>>(&p.assessments);
    if (cells == nullptr)
        throw Error(ErrorKind::ModeMismatch, "only probabilistic problems can be stripped of probabilities");

    auto strip = [](const PhfElement& e) {
        std::vector<double> degrees;
        degrees.reserve(e.size());
        for (const auto& entry : e.entries()) degrees.push_back(entry.degree);
        return HfElement(std::move(degrees));
    };

    std::vector<HfElement> stripped;
    stripped.reserve(cells->cells().size());
    for (const auto& e : cells->cells()) stripped.push_back(strip(e));

    std::vector<HfElement> weights;
    for (const auto& w : std::get<std::vector<PhfElement>>(p.weights)) weights.push_back(strip(w));

    DecisionProblem out;
    out.alternatives = p.alternatives;
    out.criteria = p.criteria;
    out.assessments = Grid<HfElement>(cells->rows(), cells->cols(), std::move(stripped));
    out.weights = std::move(weights);
    out.lambda = p.lambda;
    return out;
}

}  // namespace todim
