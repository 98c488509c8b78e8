#include "todim/report.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "todim/errors.hpp"
#include "todim/problem_io.hpp"

namespace todim {

using nlohmann::json;

ReportFormat parse_report_format(std::string_view name) {
    if (name == "table") return ReportFormat::Table;
    if (name == "json") return ReportFormat::Json;
    throw Error(ErrorKind::ValidationError, "unknown output format '" + std::string(name) + "' (expected table or json)");
}

std::string display(double value) {
    if (value == 0.0) return "0";
    if (value == 1.0) return "1";
    std::ostringstream os;
    os << std::fixed << std::setprecision(2) << value;
    std::string s = os.str();
    if (s == "-0.00") s = "0.00";
    return s;
}

std::vector<std::size_t> ranks(const RankingResult& ranking) {
    std::vector<std::size_t> out(ranking.order.size());
    for (std::size_t pos = 0; pos < ranking.order.size(); ++pos) out[ranking.order[pos]] = pos + 1;
    return out;
}

std::string ranking_line(const DecisionProblem& problem, const RankingResult& ranking) {
    std::string out;
    for (std::size_t pos = 0; pos < ranking.order.size(); ++pos) {
        if (pos > 0) out += " > ";
        out += problem.alternatives[ranking.order[pos]];
    }
    return out;
}

namespace {

json grid_json(const Grid<double>& g) {
    json rows = json::array();
    for (std::size_t i = 0; i < g.rows(); ++i) rows.push_back(std::vector<double>(g.row(i).begin(), g.row(i).end()));
    return rows;
}

}  // namespace

json weights_json(const WeightVector& w) {
    return {{"raw", w.raw},
            {"normalized", w.weights},
            {"relative", w.relative},
            {"reference_index", w.reference_index},
            {"relative_sum", w.relative_sum}};
}

json ranking_json(const DecisionProblem& problem, const RankingResult& ranking) {
    std::vector<std::string> order;
    for (std::size_t i : ranking.order) order.push_back(problem.alternatives[i]);
    return {{"method", std::string(to_string(ranking.method))},
            {"lambda", ranking.lambda},
            {"overall", ranking.overall},
            {"order", order},
            {"ranks", ranks(ranking)}};
}

json evaluation_json(const DecisionProblem& problem, const Evaluation& evaluation,
                     std::span<const std::string> footnotes) {
    json criteria = json::array();
    for (const auto& c : problem.criteria) criteria.push_back({{"name", c.name}, {"kind", std::string(to_string(c.kind))}});
    json per_criterion = json::array();
    for (const auto& g : evaluation.breakdown.per_criterion) per_criterion.push_back(grid_json(g));
    return {{"alternatives", problem.alternatives},
            {"criteria", std::move(criteria)},
            {"weights", weights_json(evaluation.weights)},
            {"dominance",
             {{"per_criterion", std::move(per_criterion)},
              {"aggregated", grid_json(evaluation.breakdown.aggregated)},
              {"sums", evaluation.breakdown.sums}}},
            {"ranking", ranking_json(problem, evaluation.ranking)},
            {"warnings", evaluation.weights.warnings},
            {"footnotes", std::vector<std::string>(footnotes.begin(), footnotes.end())}};
}

namespace {

class TextTable {
public:
    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

    void render(std::ostream& os) const {
        std::vector<std::size_t> widths;
        for (const auto& row : rows_) {
            widths.resize(std::max(widths.size(), row.size()), 0);
            for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
        }
        for (const auto& row : rows_) {
            std::string line;
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (c == 0) {
                    line += row[c] + std::string(widths[c] - row[c].size(), ' ');
                } else {
                    line += "  " + std::string(widths[c] - row[c].size(), ' ') + row[c];
                }
            }
            while (!line.empty() && line.back() == ' ') line.pop_back();
            os << line << '\n';
        }
    }

private:
    std::vector<std::vector<std::string>> rows_;
};

}  // namespace

std::string emit_report(const DecisionProblem& problem, const Evaluation& evaluation, ReportFormat format,
                        std::span<const std::string> footnotes) {
    if (format == ReportFormat::Json) return format_json(evaluation_json(problem, evaluation, footnotes));

    const auto& names = problem.alternatives;
    const std::size_t n = names.size();
    const std::size_t m = problem.criteria.size();
    std::ostringstream os;
    os << "Method: " << to_string(evaluation.ranking.method) << "  lambda: " << evaluation.ranking.lambda << "\n\n";

    std::vector<std::string> criteria_header{""};
    for (std::size_t j = 0; j < m; ++j) criteria_header.push_back("c" + std::to_string(j + 1));

    os << "Relative criteria weights\n";
    {
        TextTable t;
        t.add(criteria_header);
        std::vector<std::string> row{"relative"};
        for (double w : evaluation.weights.relative) row.push_back(display(w));
        t.add(row);
        t.render(os);
        for (std::size_t j = 0; j < m; ++j)
            os << "  c" << j + 1 << " = " << problem.criteria[j].name << " (" << to_string(problem.criteria[j].kind)
               << ")\n";
    }

    os << "\nDominance per criterion\n";
    {
        TextTable t;
        t.add(criteria_header);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                if (i == k) continue;
                std::vector<std::string> row{names[i] + " vs " + names[k]};
                for (std::size_t j = 0; j < m; ++j) row.push_back(display(evaluation.breakdown.per_criterion[j](i, k)));
                t.add(row);
            }
        t.render(os);
    }

    os << "\nAggregated dominance\n";
    {
        TextTable t;
        std::vector<std::string> header{""};
        header.insert(header.end(), names.begin(), names.end());
        t.add(header);
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<std::string> row{names[i]};
            for (std::size_t k = 0; k < n; ++k) row.push_back(display(evaluation.breakdown.aggregated(i, k)));
            t.add(row);
        }
        t.render(os);
    }

    os << "\nOverall dominance\n";
    {
        TextTable t;
        std::vector<std::string> header{""};
        header.insert(header.end(), names.begin(), names.end());
        t.add(header);
        std::vector<std::string> row{"O"};
        for (double o : evaluation.ranking.overall) row.push_back(display(o));
        t.add(row);
        t.render(os);
    }

    os << "\nRanking: " << ranking_line(problem, evaluation.ranking) << '\n';

    std::vector<std::string> notes(evaluation.weights.warnings.begin(), evaluation.weights.warnings.end());
    notes.insert(notes.end(), footnotes.begin(), footnotes.end());
    if (!notes.empty()) {
        os << "\nNotes\n";
        for (std::size_t t = 0; t < notes.size(); ++t) os << "  [" << t + 1 << "] " << notes[t] << '\n';
    }
    return os.str();
}

}  // namespace todim
