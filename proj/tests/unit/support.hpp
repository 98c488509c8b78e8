#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "todim/problem.hpp"
#include "todim/problem_io.hpp"

namespace testing_support {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string data_path(const std::string& name) { return std::string(TODIM_DATA_DIR) + "/" + name; }

inline todim::DecisionProblem phf_case() { return todim::parse(todim::fixtures::case_study_phf()); }
inline todim::DecisionProblem hf_case() { return todim::parse(todim::fixtures::case_study_hf()); }

/// Random element with 1..max_size entries, degrees in [0, 1) and a total
/// probability mass in (0.3, 1].
inline todim::PhfElement random_phf(std::mt19937_64& rng, std::size_t max_size = 4) {
    std::uniform_int_distribution<std::size_t> size(1, max_size);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const std::size_t n = size(rng);
    const double mass = 0.3 + 0.7 * unit(rng);
    std::vector<double> raw(n);
    double total = 0.0;
    for (auto& r : raw) total += (r = 0.05 + unit(rng));
    std::vector<todim::PhfEntry> entries;
    for (double r : raw) entries.push_back({unit(rng), r / total * mass});
    return todim::PhfElement(std::move(entries));
}

inline todim::HfElement random_hf(std::mt19937_64& rng, std::size_t max_size = 4) {
    std::uniform_int_distribution<std::size_t> size(1, max_size);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> degrees(size(rng));
    for (auto& d : degrees) d = unit(rng);
    return todim::HfElement(std::move(degrees));
}

/// Random probabilistic problem with n in [2, 6], m in [1, 5].
inline todim::DecisionProblem random_phf_problem(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> alts(2, 6), crits(1, 5);
    std::bernoulli_distribution cost(0.3);
    std::uniform_real_distribution<double> lambda(0.5, 5.0);
    const std::size_t n = alts(rng), m = crits(rng);
    todim::DecisionProblem p;
    for (std::size_t i = 0; i < n; ++i) p.alternatives.push_back("A" + std::to_string(i + 1));
    for (std::size_t j = 0; j < m; ++j)
        p.criteria.push_back({"c" + std::to_string(j + 1), cost(rng) ? todim::CriterionKind::Cost : todim::CriterionKind::Benefit});
    std::vector<todim::PhfElement> cells;
    for (std::size_t t = 0; t < n * m; ++t) cells.push_back(random_phf(rng));
    p.assessments = todim::Grid<todim::PhfElement>(n, m, std::move(cells));
    std::vector<todim::PhfElement> weights;
    for (std::size_t j = 0; j < m; ++j) {
        auto w = random_phf(rng, 2);
        std::vector<todim::PhfEntry> entries(w.entries().begin(), w.entries().end());
        for (auto& e : entries) e.degree = 0.05 + e.degree;
        weights.emplace_back(std::move(entries));
    }
    p.weights = std::move(weights);
    p.lambda = lambda(rng);
    return p;
}

}  // namespace testing_support
