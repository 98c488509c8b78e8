#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "todim/engine.hpp"
#include "todim/problem.hpp"

namespace todim {

enum class ReportFormat { Table, Json };

ReportFormat parse_report_format(std::string_view name);

/// Full-precision JSON view of an evaluation; the same body is served by
/// the HTTP service and printed by `todim evaluate --output json`.
nlohmann::json evaluation_json(const DecisionProblem& problem, const Evaluation& evaluation,
                               std::span<const std::string> footnotes = {});

nlohmann::json ranking_json(const DecisionProblem& problem, const RankingResult& ranking);
nlohmann::json weights_json(const WeightVector& weights);

/// Table: relative weights, per-criterion dominance, aggregated dominance and
/// overall dominance at two decimals, then the ranking line and notes.
std::string emit_report(const DecisionProblem& problem, const Evaluation& evaluation, ReportFormat format,
                        std::span<const std::string> footnotes = {});

/// "A2 > A3 > A4 > A1"
std::string ranking_line(const DecisionProblem& problem, const RankingResult& ranking);

/// 1-based rank of each alternative in input order.
std::vector<std::size_t> ranks(const RankingResult& ranking);

/// Two-decimal display value; exact 0 and 1 print as "0" and "1".
std::string display(double value);

}  // namespace todim
