#include "todim/service.hpp"

#include <httplib.h>

#include <json.hpp>

#include "todim/engine.hpp"
#include "todim/errors.hpp"
#include "todim/problem_io.hpp"
#include "todim/report.hpp"

namespace todim::service {

using nlohmann::json;

namespace {

Response json_response(int status, const json& body) { return {status, format_json(body)}; }

Response error_response(const Error& e) {
    const int status = e.kind() == ErrorKind::ModeMismatch ? 422 : 400;
    json body = {{"error", std::string(to_string(e.kind()))}, {"message", e.what()}};
    if (!e.path().empty()) body["path"] = e.path();
    return json_response(status, body);
}

struct Request {
    ProblemDocument document;
    Method method;
    json extra;
};

/// Splits a request body into the problem document and the endpoint's own
/// fields (`method`, `lambda` override and anything listed in `fields`).
Request read_request(std::string_view body, std::initializer_list<const char*> fields) {
    json doc;
    try {
        doc = json::parse(body.begin(), body.end());
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::SyntaxError, "malformed JSON at byte " + std::to_string(e.byte));
    }
    if (!doc.is_object()) throw Error(ErrorKind::SchemaError, "request body must be a JSON object");

    Request out{};
    out.extra = json::object();
    std::optional<double> lambda;
    std::optional<std::string> method;
    if (auto it = doc.find("method"); it != doc.end()) {
        if (!it->is_string()) throw Error(ErrorKind::SchemaError, "expected a string", "/method");
        method = it->get<std::string>();
        doc.erase(it);
    }
    if (auto it = doc.find("lambda"); it != doc.end()) {
        if (!it->is_number()) throw Error(ErrorKind::SchemaError, "expected a number", "/lambda");
        lambda = it->get<double>();
        doc.erase(it);
    }
    for (const char* f : fields)
        if (auto it = doc.find(f); it != doc.end()) {
            out.extra[f] = *it;
            doc.erase(it);
        }

    out.document = document_from_json(doc);
    if (lambda) {
        if (!(*lambda > 0.0)) throw Error(ErrorKind::NonPositiveLambda, "lambda must be positive", "/lambda");
        out.document.problem.lambda = *lambda;
    }
    out.method = method ? parse_method(*method) : method_for(mode_of(out.document.problem));
    return out;
}

template <typename F>
Response guarded(F&& handler) {
    try {
        return handler();
    } catch (const Error& e) {
        return error_response(e);
    } catch (const std::exception& e) {
        return json_response(500, {{"error", "InternalError"}, {"message", e.what()}});
    }
}

}  // namespace

Response handle_health() { return json_response(200, {{"status", "ok"}, {"version", std::string(kVersion)}}); }

Response handle_evaluate(std::string_view body) {
    return guarded([&] {
        const auto req = read_request(body, {});
        const auto evaluation = evaluate(req.document.problem, req.method);
        return json_response(200, evaluation_json(req.document.problem, evaluation, req.document.metadata.notes));
    });
}

Response handle_sensitivity_lambda(std::string_view body) {
    return guarded([&] {
        const auto req = read_request(body, {"lambdas"});
        if (!req.extra.contains("lambdas")) throw Error(ErrorKind::SchemaError, "missing required field", "/lambdas");
        const json& values = req.extra["lambdas"];
        if (!values.is_array()) throw Error(ErrorKind::SchemaError, "expected an array", "/lambdas");
        std::vector<double> lambdas;
        for (std::size_t t = 0; t < values.size(); ++t) {
            if (!values[t].is_number())
                throw Error(ErrorKind::SchemaError, "expected a number", "/lambdas/" + std::to_string(t));
            lambdas.push_back(values[t].get<double>());
        }
        const auto results = sweep_lambda(req.document.problem, req.method, lambdas);
        json out = json::array();
        for (const auto& r : results) out.push_back(ranking_json(req.document.problem, r));
        return json_response(200, out);
    });
}

Response handle_sensitivity_weight(std::string_view body) {
    return guarded([&] {
        const auto req = read_request(body, {"criterion", "delta", "deltas"});
        const auto& problem = req.document.problem;
        Evaluation evaluation;
        if (req.extra.contains("deltas")) {
            const json& values = req.extra["deltas"];
            if (!values.is_array()) throw Error(ErrorKind::SchemaError, "expected an array", "/deltas");
            std::vector<double> deltas;
            for (std::size_t t = 0; t < values.size(); ++t) {
                if (!values[t].is_number())
                    throw Error(ErrorKind::SchemaError, "expected a number", "/deltas/" + std::to_string(t));
                deltas.push_back(values[t].get<double>());
            }
            if (deltas.size() != problem.criteria.size())
                throw Error(ErrorKind::ValidationError, "expected one delta per criterion", "/deltas");
            evaluation = perturb_weights(problem, req.method, deltas);
        } else {
            if (!req.extra.contains("criterion"))
                throw Error(ErrorKind::SchemaError, "missing required field", "/criterion");
            if (!req.extra.contains("delta")) throw Error(ErrorKind::SchemaError, "missing required field", "/delta");
            const json& criterion = req.extra["criterion"];
            const json& delta = req.extra["delta"];
            if (!criterion.is_number_unsigned())
                throw Error(ErrorKind::SchemaError, "expected a non-negative integer", "/criterion");
            if (!delta.is_number()) throw Error(ErrorKind::SchemaError, "expected a number", "/delta");
            evaluation = perturb_weight(problem, req.method, criterion.get<std::size_t>(), delta.get<double>());
        }
        return json_response(200, {{"ranking", ranking_json(problem, evaluation.ranking)},
                                   {"weights", weights_json(evaluation.weights)}});
    });
}

struct Server::Impl {
    ServerOptions options;
    httplib::Server http;
    int bound_port = -1;
};

Server::Server(ServerOptions options) : impl_(std::make_unique<Impl>()) {
    impl_->options = std::move(options);
    auto& http = impl_->http;

    // SO_REUSEADDR without SO_REUSEPORT
    http.set_socket_options([](socket_t sock) {
        int yes = 1;
        setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, reinterpret_cast<const void*>(&yes), sizeof(yes));
    });
    http.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                              {"Access-Control-Allow-Headers", "Content-Type"},
                              {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});

    auto reply = [](httplib::Response& res, const Response& r) { res.status = r.status; res.set_content(r.body, "application/json"); };
    http.Get("/v1/health", [reply](const httplib::Request&, httplib::Response& res) { reply(res, handle_health()); });
    http.Post("/v1/evaluate",
              [reply](const httplib::Request& req, httplib::Response& res) { reply(res, handle_evaluate(req.body)); });
    http.Post("/v1/sensitivity/lambda", [reply](const httplib::Request& req, httplib::Response& res) {
        reply(res, handle_sensitivity_lambda(req.body));
    });
    http.Post("/v1/sensitivity/weight", [reply](const httplib::Request& req, httplib::Response& res) {
        reply(res, handle_sensitivity_weight(req.body));
    });
    http.Options(R"(/v1/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });

    if (!impl_->options.static_dir.empty()) http.set_mount_point("/", impl_->options.static_dir);
}

Server::~Server() { stop(); }

bool Server::bind() {
    auto& o = impl_->options;
    if (o.port == 0) {
        impl_->bound_port = impl_->http.bind_to_any_port(o.host);
        return impl_->bound_port > 0;
    }
    if (!impl_->http.bind_to_port(o.host, o.port)) return false;
    impl_->bound_port = o.port;
    return true;
}

int Server::port() const noexcept { return impl_->bound_port; }

void Server::run() { impl_->http.listen_after_bind(); }

void Server::stop() {
    if (impl_ && impl_->http.is_running()) impl_->http.stop();
}

void Server::wait_until_ready() const { impl_->http.wait_until_ready(); }

}  // namespace todim::service
