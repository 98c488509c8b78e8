#include "todim/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <csignal>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "todim/engine.hpp"
#include "todim/errors.hpp"
#include "todim/problem_io.hpp"
#include "todim/report.hpp"
#include "todim/service.hpp"

namespace todim::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::ValidationError, "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ProblemDocument load(const std::string& path) {
    try {
        return parse_document(read_file(path));
    } catch (const Error& e) {
        throw Error(e.kind(), path + ": " + e.what() + (e.path().empty() ? "" : " (at " + e.path() + ")"), e.path());
    }
}

double parse_double(std::string_view text, std::string_view what) {
    double v = 0.0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc{} || ptr != end || text.empty())
        throw Error(ErrorKind::ValidationError, "malformed " + std::string(what) + " '" + std::string(text) + "'");
    return v;
}

Method resolve_method(const std::optional<std::string>& flag, const DecisionProblem& problem) {
    return flag ? parse_method(*flag) : method_for(mode_of(problem));
}

struct CommonFlags {
    std::optional<std::string> method;
    std::optional<double> lambda;
    std::string output = "table";
};

void apply_lambda(const CommonFlags& flags, DecisionProblem& problem) {
    if (flags.lambda) {
        if (!(*flags.lambda > 0.0)) throw Error(ErrorKind::NonPositiveLambda, "--lambda must be positive");
        problem.lambda = *flags.lambda;
    }
}

int cmd_evaluate(const std::string& input, const CommonFlags& flags, std::ostream& out) {
    auto doc = load(input);
    apply_lambda(flags, doc.problem);
    const auto format = parse_report_format(flags.output);
    const auto method = resolve_method(flags.method, doc.problem);
    const auto evaluation = evaluate(doc.problem, method);
    out << emit_report(doc.problem, evaluation, format, doc.metadata.notes);
    return kExitOk;
}

int cmd_compare(const std::string& phf_path, const std::optional<std::string>& hf_path, bool strip,
                const CommonFlags& flags, std::ostream& out) {
    if (hf_path.has_value() == strip)
        throw Error(ErrorKind::ValidationError, "compare needs exactly one of --hf or --strip-probabilities");
    auto phf = load(phf_path).problem;
    apply_lambda(flags, phf);
    DecisionProblem hf = strip ? strip_probabilities(phf) : load(*hf_path).problem;
    apply_lambda(flags, hf);
    const auto format = parse_report_format(flags.output);

    const auto phf_eval = evaluate(phf, Method::Phf);
    const auto hf_eval = evaluate(hf, Method::Hf);
    if (phf.alternatives != hf.alternatives)
        throw Error(ErrorKind::ValidationError, "the two problems list different alternatives");

    if (format == ReportFormat::Json) {
        nlohmann::json body = {{"alternatives", phf.alternatives},
                               {"methods", nlohmann::json::array({ranking_json(phf, phf_eval.ranking),
                                                                  ranking_json(hf, hf_eval.ranking)})}};
        out << format_json(body);
        return kExitOk;
    }

    const auto phf_ranks = ranks(phf_eval.ranking);
    const auto hf_ranks = ranks(hf_eval.ranking);
    std::size_t name_width = std::string_view("Alternative").size();
    for (const auto& a : phf.alternatives) name_width = std::max(name_width, a.size());
    auto cell = [](const std::string& s, std::size_t w) { return std::string(w > s.size() ? w - s.size() : 0, ' ') + s; };
    out << "Alternative" << std::string(name_width - 11, ' ') << "  " << cell("rank(phf)", 9) << "  "
        << cell("O(phf)", 6) << "  " << cell("rank(hf)", 8) << "  " << cell("O(hf)", 6) << '\n';
    for (std::size_t i = 0; i < phf.alternatives.size(); ++i) {
        const auto& a = phf.alternatives[i];
        out << a << std::string(name_width - a.size(), ' ') << "  " << cell(std::to_string(phf_ranks[i]), 9) << "  "
            << cell(display(phf_eval.ranking.overall[i]), 6) << "  " << cell(std::to_string(hf_ranks[i]), 8) << "  "
            << cell(display(hf_eval.ranking.overall[i]), 6) << '\n';
    }
    out << "\nphf: " << ranking_line(phf, phf_eval.ranking) << "\nhf:  " << ranking_line(hf, hf_eval.ranking) << '\n';
    out << (phf_eval.ranking.order == hf_eval.ranking.order ? "Rankings agree.\n" : "Rankings differ.\n");
    return kExitOk;
}

int cmd_sweep(const std::string& input, const std::string& range, const CommonFlags& flags, std::ostream& out) {
    const auto lambdas = parse_lambda_range(range);
    const auto doc = load(input);
    const auto format = parse_report_format(flags.output);
    const auto method = resolve_method(flags.method, doc.problem);
    const auto results = sweep_lambda(doc.problem, method, lambdas);

    std::vector<double> change_points;
    for (std::size_t t = 1; t < results.size(); ++t)
        if (results[t].order != results[t - 1].order) change_points.push_back(results[t].lambda);

    if (format == ReportFormat::Json) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& r : results) rows.push_back(ranking_json(doc.problem, r));
        out << format_json({{"results", rows}, {"change_points", change_points}});
        return kExitOk;
    }

    for (const auto& r : results) {
        std::ostringstream lam;
        lam << r.lambda;
        out << "lambda " << lam.str() << std::string(lam.str().size() < 6 ? 6 - lam.str().size() : 0, ' ') << "  O =";
        for (double o : r.overall) {
            const auto s = display(o);
            out << ' ' << std::string(s.size() < 5 ? 5 - s.size() : 0, ' ') << s;
        }
        out << "  " << ranking_line(doc.problem, r) << '\n';
    }
    if (change_points.empty()) {
        out << "\nRanking is stable across the range.\n";
    } else {
        out << "\nRanking changes at lambda =";
        for (double c : change_points) out << ' ' << c;
        out << '\n';
    }
    return kExitOk;
}

service::Server* g_server = nullptr;

extern "C" void handle_signal(int) {
    if (g_server != nullptr) g_server->stop();
}

int cmd_serve(std::optional<int> port_flag, const std::string& host, const std::string& static_dir, std::ostream& out,
              std::ostream& err) {
    int port = service::kDefaultPort;
    if (port_flag) {
        port = *port_flag;
    } else if (const char* env = std::getenv("TODIM_PORT"); env != nullptr && *env != '\0') {
        port = static_cast<int>(parse_double(env, "TODIM_PORT"));
    }
    if (port <= 0 || port > 65535) throw Error(ErrorKind::ValidationError, "port must be in 1..65535");

    service::Server server({host, port, static_dir});
    if (!server.bind()) {
        err << "error: cannot listen on " << host << ":" << port << " (port in use?)\n";
        return kExitInternal;
    }
    out << "todim service listening on http://" << host << ":" << server.port() << std::endl;
    g_server = &server;
    std::signal(SIGINT, handle_signal);
    std::signal(SIGTERM, handle_signal);
    server.run();
    g_server = nullptr;
    return kExitOk;
}

int cmd_validate(const std::string& input, bool canonical, std::ostream& out) {
    const auto doc = load(input);
    if (canonical)
        out << serialize(doc);
    else
        out << input << ": ok (" << doc.problem.alternatives.size() << " alternatives, " << doc.problem.criteria.size()
            << " criteria, " << to_string(mode_of(doc.problem)) << " assessments)\n";
    return kExitOk;
}

}  // namespace

std::vector<double> parse_lambda_range(std::string_view spec) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto colon = spec.find(':', start);
        parts.push_back(spec.substr(start, colon == std::string_view::npos ? std::string_view::npos : colon - start));
        if (colon == std::string_view::npos) break;
        start = colon + 1;
    }
    if (parts.size() != 3)
        throw Error(ErrorKind::ValidationError, "lambda range must be start:stop:step, got '" + std::string(spec) + "'");
    const double first = parse_double(parts[0], "range start");
    const double last = parse_double(parts[1], "range stop");
    const double step = parse_double(parts[2], "range step");
    if (!(step > 0.0)) throw Error(ErrorKind::ValidationError, "range step must be positive");
    if (!(first > 0.0)) throw Error(ErrorKind::NonPositiveLambda, "lambda range must start above zero");
    if (last < first) throw Error(ErrorKind::ValidationError, "range stop is below its start");

    const auto count = static_cast<std::size_t>(std::floor((last - first) / step + 1e-9)) + 1;
    if (count > 100000) throw Error(ErrorKind::ValidationError, "lambda range has too many steps");
    std::vector<double> out;
    out.reserve(count);
    for (std::size_t t = 0; t < count; ++t) out.push_back(first + static_cast<double>(t) * step);
    return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"TODIM ranking under probabilistic hesitant, hesitant and crisp assessments", "todim"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string input;

    auto add_method = [&](CLI::App* sub) {
        sub->add_option("--method", flags.method, "phf, hf or classical (default: the file's cell mode)")
            ->check(CLI::IsMember({"phf", "hf", "classical"}));
    };
    auto add_output = [&](CLI::App* sub) {
        sub->add_option("--output", flags.output, "table or json")->check(CLI::IsMember({"table", "json"}));
    };

    auto* evaluate_cmd = app.add_subcommand("evaluate", "rank the alternatives of a problem file");
    evaluate_cmd->add_option("--input", input, "problem file (*.todim.json)")->required();
    add_method(evaluate_cmd);
    evaluate_cmd->add_option("--lambda", flags.lambda, "attenuation factor of losses (default 2.25)");
    add_output(evaluate_cmd);

    std::string phf_path;
    std::optional<std::string> hf_path;
    bool strip = false;
    auto* compare_cmd = app.add_subcommand("compare", "rank a problem with the phf and hf pipelines side by side");
    compare_cmd->add_option("--phf", phf_path, "problem file with probabilistic assessments")->required();
    compare_cmd->add_option("--hf", hf_path, "matching problem file with hesitant assessments");
    compare_cmd->add_flag("--strip-probabilities", strip, "derive the hesitant twin by dropping probabilities");
    compare_cmd->add_option("--lambda", flags.lambda, "attenuation factor of losses");
    add_output(compare_cmd);

    std::string range;
    auto* sweep_cmd = app.add_subcommand("sweep", "re-rank over a range of lambda values");
    sweep_cmd->add_option("--input", input, "problem file")->required();
    sweep_cmd->add_option("--lambda-range", range, "start:stop:step")->required();
    add_method(sweep_cmd);
    add_output(sweep_cmd);

    std::optional<int> port;
    std::string host = "0.0.0.0";
    std::string static_dir;
    auto* serve_cmd = app.add_subcommand("serve", "run the HTTP decision service");
    serve_cmd->add_option("--port", port, "listen port (default $TODIM_PORT, then 8080)");
    serve_cmd->add_option("--host", host, "listen address");
    serve_cmd->add_option("--static-dir", static_dir, "serve the console's built assets from this directory");

    bool canonical = false;
    auto* validate_cmd = app.add_subcommand("validate", "check a problem file");
    validate_cmd->add_option("--input", input, "problem file")->required();
    validate_cmd->add_flag("--canonical", canonical, "print the canonical serialization");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUser;
    }

    try {
        if (*evaluate_cmd) return cmd_evaluate(input, flags, out);
        if (*compare_cmd) return cmd_compare(phf_path, hf_path, strip, flags, out);
        if (*sweep_cmd) return cmd_sweep(input, range, flags, out);
        if (*serve_cmd) return cmd_serve(port, host, static_dir, out, err);
        if (*validate_cmd) return cmd_validate(input, canonical, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUser;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitInternal;
}

}  // namespace todim::cli
