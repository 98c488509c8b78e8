#include "todim/problem_io.hpp"

#include <set>
#include <sstream>

#include "todim/errors.hpp"

namespace todim {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& message) {
    throw Error(ErrorKind::SchemaError, message, path);
}

const json& require(const json& obj, const char* key, const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end()) schema_error(path + "/" + key, std::string("missing required field '") + key + "'");
    return *it;
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& path) {
    for (const auto& [key, _] : obj.items()) {
        bool known = false;
        for (const char* a : allowed) known = known || key == a;
        if (!known) schema_error(path + "/" + key, "unknown field '" + key + "'");
    }
}

const json& require_array(const json& v, const std::string& path) {
    if (!v.is_array()) schema_error(path, "expected an array");
    return v;
}

double require_number(const json& v, const std::string& path) {
    if (!v.is_number()) schema_error(path, "expected a number");
    return v.get<double>();
}

std::string require_string(const json& v, const std::string& path) {
    if (!v.is_string()) schema_error(path, "expected a string");
    return v.get<std::string>();
}

/// Re-raises element construction errors with the document path attached.
template <typename F>
auto at_path(const std::string& path, F&& make) {
    try {
        return make();
    } catch (const Error& e) {
        if (!e.path().empty()) throw;
        throw Error(e.kind(), e.what(), path);
    }
}

Mode cell_mode(const json& cell, const std::string& path) {
    if (cell.is_number()) return Mode::Crisp;
    if (!cell.is_array()) schema_error(path, "cell must be a number or an array");
    if (cell.empty()) throw Error(ErrorKind::EmptyElement, "element has no entries", path);
    if (cell.front().is_object()) return Mode::Phf;
    if (cell.front().is_number()) return Mode::Hf;
    schema_error(path + "/0", "entry must be a number or a {\"d\", \"p\"} object");
}

PhfElement parse_phf(const json& cell, const std::string& path) {
    std::vector<PhfEntry> entries;
    for (std::size_t t = 0; t < cell.size(); ++t) {
        const auto entry_path = path + "/" + std::to_string(t);
        const json& e = cell[t];
        if (!e.is_object()) schema_error(entry_path, "expected a {\"d\", \"p\"} object");
        reject_unknown_keys(e, {"d", "p"}, entry_path);
        const double d = require_number(require(e, "d", entry_path), entry_path + "/d");
        const double p = require_number(require(e, "p", entry_path), entry_path + "/p");
        if (p < 0.0) throw Error(ErrorKind::NegativeProbability, "probability is negative", entry_path + "/p");
        if (d < 0.0) throw Error(ErrorKind::NegativeDegree, "degree is negative", entry_path + "/d");
        entries.push_back({d, p});
    }
    return at_path(path, [&] { return PhfElement(std::move(entries)); });
}

HfElement parse_hf(const json& cell, const std::string& path) {
    std::vector<double> degrees;
    for (std::size_t t = 0; t < cell.size(); ++t) {
        const auto entry_path = path + "/" + std::to_string(t);
        const double d = require_number(cell[t], entry_path);
        if (d < 0.0) throw Error(ErrorKind::NegativeDegree, "degree is negative", entry_path);
        degrees.push_back(d);
    }
    return at_path(path, [&] { return HfElement(std::move(degrees)); });
}

template <typename T>
T parse_cell(const json& cell, const std::string& path) {
    if constexpr (std::is_same_v<T, PhfElement>)
        return parse_phf(cell, path);
    else if constexpr (std::is_same_v<T, HfElement>)
        return parse_hf(cell, path);
    else
        return require_number(cell, path);
}

void check_mode(Mode expected, const json& cell, const std::string& path) {
    const Mode actual = cell_mode(cell, path);
    if (actual != expected)
        throw Error(ErrorKind::ValidationError,
                    std::string("cell is ") + std::string(to_string(actual)) + " but the matrix is " +
                        std::string(to_string(expected)),
                    path);
}

template <typename T>
std::pair<Grid<T>, std::vector<T>> parse_cells(Mode mode, const json& rows, const json& weights, std::size_t n,
                                               std::size_t m) {
    std::vector<T> cells;
    for (std::size_t i = 0; i < n; ++i) {
        const auto row_path = "/problem/assessments/" + std::to_string(i);
        const json& row = require_array(rows[i], row_path);
        if (row.size() != m)
            throw Error(ErrorKind::ValidationError,
                        "row has " + std::to_string(row.size()) + " cells, expected " + std::to_string(m), row_path);
        for (std::size_t j = 0; j < m; ++j) {
            const auto path = row_path + "/" + std::to_string(j);
            check_mode(mode, row[j], path);
            cells.push_back(parse_cell<T>(row[j], path));
        }
    }
    std::vector<T> w;
    for (std::size_t j = 0; j < weights.size(); ++j) {
        const auto path = "/problem/weights/" + std::to_string(j);
        check_mode(mode, weights[j], path);
        w.push_back(parse_cell<T>(weights[j], path));
    }
    return {Grid<T>(n, m, std::move(cells)), std::move(w)};
}

DecisionProblem parse_problem(const json& p) {
    const std::string root = "/problem";
    if (!p.is_object()) schema_error(root, "expected an object");
    reject_unknown_keys(p, {"alternatives", "criteria", "assessments", "weights", "lambda"}, root);

    DecisionProblem out;
    const json& alternatives = require_array(require(p, "alternatives", root), root + "/alternatives");
    for (std::size_t i = 0; i < alternatives.size(); ++i)
        out.alternatives.push_back(require_string(alternatives[i], root + "/alternatives/" + std::to_string(i)));

    const json& criteria = require_array(require(p, "criteria", root), root + "/criteria");
    for (std::size_t j = 0; j < criteria.size(); ++j) {
        const auto path = root + "/criteria/" + std::to_string(j);
        const json& c = criteria[j];
        if (!c.is_object()) schema_error(path, "expected an object");
        reject_unknown_keys(c, {"name", "kind"}, path);
        Criterion crit;
        crit.name = require_string(require(c, "name", path), path + "/name");
        const auto kind = require_string(require(c, "kind", path), path + "/kind");
        crit.kind = at_path(path + "/kind", [&] { return parse_criterion_kind(kind); });
        out.criteria.push_back(std::move(crit));
    }

    if (auto it = p.find("lambda"); it != p.end()) out.lambda = require_number(*it, root + "/lambda");

    const json& rows = require_array(require(p, "assessments", root), root + "/assessments");
    const json& weights = require_array(require(p, "weights", root), root + "/weights");

    const std::size_t n = out.alternatives.size();
    const std::size_t m = out.criteria.size();
    if (n == 0) throw Error(ErrorKind::ValidationError, "no alternatives", root + "/alternatives");
    if (m == 0) throw Error(ErrorKind::ValidationError, "no criteria", root + "/criteria");
    if (rows.size() != n)
        throw Error(ErrorKind::ValidationError,
                    "assessments have " + std::to_string(rows.size()) + " rows, expected " + std::to_string(n),
                    root + "/assessments");
    if (weights.size() != m)
        throw Error(ErrorKind::ValidationError,
                    "expected " + std::to_string(m) + " weights, got " + std::to_string(weights.size()),
                    root + "/weights");

    const json& first_row = require_array(rows[0], root + "/assessments/0");
    if (first_row.empty()) throw Error(ErrorKind::ValidationError, "row has no cells", root + "/assessments/0");
    const Mode mode = cell_mode(first_row[0], root + "/assessments/0/0");
    switch (mode) {
        case Mode::Phf: {
            auto [cells, w] = parse_cells<PhfElement>(mode, rows, weights, n, m);
            out.assessments = std::move(cells);
            out.weights = std::move(w);
            break;
        }
        case Mode::Hf: {
            auto [cells, w] = parse_cells<HfElement>(mode, rows, weights, n, m);
            out.assessments = std::move(cells);
            out.weights = std::move(w);
            break;
        }
        case Mode::Crisp: {
            auto [cells, w] = parse_cells<double>(mode, rows, weights, n, m);
            out.assessments = std::move(cells);
            out.weights = std::move(w);
            break;
        }
    }
    validate(out);
    return out;
}

}  // namespace

ProblemDocument document_from_json(const json& doc) {
    if (!doc.is_object()) schema_error("", "document must be a JSON object");
    reject_unknown_keys(doc, {"schema_version", "problem", "metadata"}, "");

    ProblemDocument out;
    const json& version = require(doc, "schema_version", "");
    if (!version.is_number_integer()) schema_error("/schema_version", "expected an integer");
    out.schema_version = version.get<int>();
    if (out.schema_version != kSchemaVersion)
        schema_error("/schema_version", "unsupported schema version " + std::to_string(out.schema_version));

    if (auto it = doc.find("metadata"); it != doc.end()) {
        const json& meta = *it;
        if (!meta.is_object()) schema_error("/metadata", "expected an object");
        reject_unknown_keys(meta, {"title", "author", "notes"}, "/metadata");
        if (auto t = meta.find("title"); t != meta.end()) out.metadata.title = require_string(*t, "/metadata/title");
        if (auto a = meta.find("author"); a != meta.end())
            out.metadata.author = require_string(*a, "/metadata/author");
        if (auto n = meta.find("notes"); n != meta.end()) {
            require_array(*n, "/metadata/notes");
            for (std::size_t t = 0; t < n->size(); ++t)
                out.metadata.notes.push_back(require_string((*n)[t], "/metadata/notes/" + std::to_string(t)));
        }
    }

    out.problem = parse_problem(require(doc, "problem", ""));
    return out;
}

ProblemDocument parse_document(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::SyntaxError,
                    "malformed JSON at byte " + std::to_string(e.byte) + ": " + std::string(e.what()));
    }
    return document_from_json(doc);
}

DecisionProblem parse(std::string_view text) { return parse_document(text).problem; }

namespace {

json cell_json(const PhfElement& e) {
    json out = json::array();
    for (const auto& entry : e.entries()) out.push_back({{"d", entry.degree}, {"p", entry.probability}});
    return out;
}

json cell_json(const HfElement& e) { return json(std::vector<double>(e.degrees().begin(), e.degrees().end())); }

json cell_json(double v) { return v; }

}  // namespace

json to_json(const DecisionProblem& p) {
    json out = json::object();
    out["alternatives"] = p.alternatives;
    json criteria = json::array();
    for (const auto& c : p.criteria) criteria.push_back({{"name", c.name}, {"kind", std::string(to_string(c.kind))}});
    out["criteria"] = std::move(criteria);
    out["lambda"] = p.lambda;
    out["assessments"] = std::visit(
        [](const auto& grid) {
            json rows = json::array();
            for (std::size_t i = 0; i < grid.rows(); ++i) {
                json row = json::array();
                for (const auto& cell : grid.row(i)) row.push_back(cell_json(cell));
                rows.push_back(std::move(row));
            }
            return rows;
        },
        p.assessments);
    out["weights"] = std::visit(
        [](const auto& weights) {
            json w = json::array();
            for (const auto& e : weights) w.push_back(cell_json(e));
            return w;
        },
        p.weights);
    return out;
}

json to_json(const ProblemDocument& doc) {
    json out = json::object();
    out["schema_version"] = doc.schema_version;
    out["problem"] = to_json(doc.problem);
    if (!doc.metadata.empty()) {
        json meta = json::object();
        if (doc.metadata.title) meta["title"] = *doc.metadata.title;
        if (doc.metadata.author) meta["author"] = *doc.metadata.author;
        if (!doc.metadata.notes.empty()) meta["notes"] = doc.metadata.notes;
        out["metadata"] = std::move(meta);
    }
    return out;
}

namespace {

constexpr std::size_t kInlineWidth = 100;

void emit(const json& v, int depth, std::ostringstream& os) {
    const std::string compact = v.dump();
    if (!v.is_structured() || v.empty() || compact.size() + static_cast<std::size_t>(depth) * 2 <= kInlineWidth) {
        os << compact;
        return;
    }
    const std::string pad(static_cast<std::size_t>(depth + 1) * 2, ' ');
    const bool object = v.is_object();
    os << (object ? "{\n" : "[\n");
    bool first = true;
    for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) os << ",\n";
        first = false;
        os << pad;
        if (object) os << json(it.key()).dump() << ": ";
        emit(*it, depth + 1, os);
    }
    os << '\n' << std::string(static_cast<std::size_t>(depth) * 2, ' ') << (object ? '}' : ']');
}

}  // namespace

std::string format_json(const json& value) {
    std::ostringstream os;
    emit(value, 0, os);
    os << '\n';
    return os.str();
}

std::string serialize(const ProblemDocument& doc) { return format_json(to_json(doc)); }

std::string serialize(const DecisionProblem& problem) {
    ProblemDocument doc;
    doc.problem = problem;
    return serialize(doc);
}

}  // namespace todim
