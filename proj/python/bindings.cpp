#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "todim/engine.hpp"
#include "todim/errors.hpp"
#include "todim/problem_io.hpp"
#include "todim/report.hpp"

namespace py = pybind11;
using namespace todim;

namespace {

std::vector<std::vector<double>> to_lists(const Grid<double>& g) {
    std::vector<std::vector<double>> out;
    for (std::size_t i = 0; i < g.rows(); ++i) out.emplace_back(g.row(i).begin(), g.row(i).end());
    return out;
}

PhfElement make_phf(const std::vector<std::pair<double, double>>& entries) {
    std::vector<PhfEntry> out;
    for (const auto& [d, p] : entries) out.push_back({d, p});
    return PhfElement(std::move(out));
}

std::vector<std::pair<double, double>> phf_entries(const PhfElement& e) {
    std::vector<std::pair<double, double>> out;
    for (const auto& entry : e.entries()) out.emplace_back(entry.degree, entry.probability);
    return out;
}

Method resolve(const DecisionProblem& p, const std::optional<std::string>& method) {
    return method ? parse_method(*method) : method_for(mode_of(p));
}

}  // namespace

PYBIND11_MODULE(_todim, m) {
    m.doc() = "TODIM ranking under probabilistic hesitant, hesitant and crisp assessments";

    static py::exception<Error> todim_error(m, "TodimError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object args = py::make_tuple(std::string(to_string(e.kind())), std::string(e.what()), e.path());
            PyErr_SetObject(todim_error.ptr(), args.ptr());
        }
    });

    py::enum_<Ordering>(m, "Ordering")
        .value("LESS", Ordering::Less)
        .value("EQUAL", Ordering::Equal)
        .value("GREATER", Ordering::Greater);
    py::enum_<Direction>(m, "Direction")
        .value("ASCENDING", Direction::Ascending)
        .value("DESCENDING", Direction::Descending);

    py::class_<PhfElement>(m, "PhfElement")
        .def(py::init(&make_phf), py::arg("entries"))
        .def_property_readonly("entries", &phf_entries)
        .def("__len__", &PhfElement::size)
        .def_property_readonly("probability_mass", &PhfElement::probability_mass)
        .def(py::self == py::self)
        .def("__repr__", [](const PhfElement& e) {
            std::string s = "PhfElement([";
            for (const auto& [d, p] : phf_entries(e)) s += "(" + std::to_string(d) + ", " + std::to_string(p) + "), ";
            return s + "])";
        });

    py::class_<HfElement>(m, "HfElement")
        .def(py::init<std::vector<double>>(), py::arg("degrees"))
        .def_property_readonly("degrees",
                               [](const HfElement& e) { return std::vector<double>(e.degrees().begin(), e.degrees().end()); })
        .def("__len__", &HfElement::size)
        .def(py::self == py::self);

    m.def("normalize_probabilities", &normalize_probabilities, py::arg("element"));
    m.def("pad", &pad, py::arg("element"), py::arg("target_count"));
    m.def("order", [](const PhfElement& e, Direction d) { return order(e, d).element(); }, py::arg("element"),
          py::arg("direction") = Direction::Ascending);
    m.def("score", &score);
    m.def("variance", &variance);
    m.def("compare", &compare);
    m.def("distance", &distance, py::arg("a"), py::arg("b"), py::arg("direction") = Direction::Ascending,
          py::arg("width") = 0);
    m.def("hf_score", &hf_score);
    m.def("hf_variance", &hf_variance);
    m.def("hf_compare", &hf_compare);
    m.def("hf_pad", &hf_pad, py::arg("element"), py::arg("target_count"));
    m.def("hf_distance", &hf_distance, py::arg("a"), py::arg("b"), py::arg("width") = 0);

    py::class_<WeightVector>(m, "WeightVector")
        .def_readonly("raw", &WeightVector::raw)
        .def_readonly("weights", &WeightVector::weights)
        .def_readonly("relative", &WeightVector::relative)
        .def_readonly("reference_index", &WeightVector::reference_index)
        .def_readonly("relative_sum", &WeightVector::relative_sum)
        .def_readonly("warnings", &WeightVector::warnings);
    m.def("relativize", [](const std::vector<double>& w) { return relativize(w); }, py::arg("weights"));

    py::class_<DecisionProblem>(m, "DecisionProblem")
        .def_static("parse", [](const std::string& text) { return parse(text); }, py::arg("text"))
        .def_static("case_study_phf", [] { return parse(fixtures::case_study_phf()); })
        .def_static("case_study_hf", [] { return parse(fixtures::case_study_hf()); })
        .def_readonly("alternatives", &DecisionProblem::alternatives)
        .def_property_readonly("criteria",
                               [](const DecisionProblem& p) {
                                   std::vector<std::pair<std::string, std::string>> out;
                                   for (const auto& c : p.criteria) out.emplace_back(c.name, std::string(to_string(c.kind)));
                                   return out;
                               })
        .def_readwrite("lambda_", &DecisionProblem::lambda)
        .def_property_readonly("mode", [](const DecisionProblem& p) { return std::string(to_string(mode_of(p))); })
        .def("serialize", [](const DecisionProblem& p) { return serialize(p); })
        .def("strip_probabilities", &strip_probabilities)
        .def(py::self == py::self);

    py::class_<RankingResult>(m, "RankingResult")
        .def_readonly("overall", &RankingResult::overall)
        .def_readonly("order", &RankingResult::order)
        .def_readonly("lambda_", &RankingResult::lambda)
        .def_property_readonly("method", [](const RankingResult& r) { return std::string(to_string(r.method)); });

    py::class_<Evaluation>(m, "Evaluation")
        .def_readonly("weights", &Evaluation::weights)
        .def_readonly("ranking", &Evaluation::ranking)
        .def_property_readonly("per_criterion",
                               [](const Evaluation& e) {
                                   std::vector<std::vector<std::vector<double>>> out;
                                   for (const auto& g : e.breakdown.per_criterion) out.push_back(to_lists(g));
                                   return out;
                               })
        .def_property_readonly("aggregated", [](const Evaluation& e) { return to_lists(e.breakdown.aggregated); })
        .def_property_readonly("sums", [](const Evaluation& e) { return e.breakdown.sums; });

    m.def(
        "evaluate",
        [](const DecisionProblem& p, std::optional<std::string> method, bool parallel) {
            return evaluate(p, resolve(p, method), EvaluateOptions{parallel});
        },
        py::arg("problem"), py::arg("method") = py::none(), py::arg("parallel") = false);
    m.def(
        "sweep_lambda",
        [](const DecisionProblem& p, const std::vector<double>& lambdas, std::optional<std::string> method) {
            return sweep_lambda(p, resolve(p, method), lambdas);
        },
        py::arg("problem"), py::arg("lambdas"), py::arg("method") = py::none());
    m.def(
        "perturb_weight",
        [](const DecisionProblem& p, std::size_t criterion, double delta, std::optional<std::string> method) {
            return perturb_weight(p, resolve(p, method), criterion, delta);
        },
        py::arg("problem"), py::arg("criterion"), py::arg("delta"), py::arg("method") = py::none());
    m.def(
        "emit_report",
        [](const DecisionProblem& p, const Evaluation& e, const std::string& format,
           const std::vector<std::string>& footnotes) {
            return emit_report(p, e, parse_report_format(format), footnotes);
        },
        py::arg("problem"), py::arg("evaluation"), py::arg("format") = "table",
        py::arg("footnotes") = std::vector<std::string>{});
}
