#include "gluemin/serialize.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace gluemin;

// Thin JSON-string boundary: documents cross the language border in the same
// canonical format the CLI reads and writes.
namespace {

GluedAutomaton load_automaton(const std::string& text) {
    Document d = parse_document(text);
    if (const auto* a = std::get_if<GluedAutomaton>(&d))
        return *a;
    if (const auto* w = std::get_if<WFA>(&d)) {
        GluedAutomaton a;
        a.alphabet = w->alphabet;
        a.profile = Profile::weighted;
        a.states = embed_vec(w->dim);
        a.initial = {0, w->initial};
        a.final_map.source = a.states;
        a.final_map.target = a.output_space();
        a.final_map.assignment = {{0, Matrix::from_rows({w->final_row}, w->dim)}};
        for (const auto& [sym, m] : w->transitions) {
            GluedMorphism dm;
            dm.source = a.states;
            dm.target = a.states;
            dm.assignment = {{0, m}};
            a.transitions.emplace(sym, dm);
        }
        return a;
    }
    throw GluedError("ParseError", "expected a wfa or glued_automaton document");
}

} // namespace

PYBIND11_MODULE(_gluemin, m) {
    m.doc() = "exact-rational automata minimization over glued vector spaces";

    py::register_exception<GluedError>(m, "GluedError");

    m.def("validate", [](const std::string& doc) {
        return auto_validate(load_automaton(doc));
    });
    m.def("eval", [](const std::string& doc, const std::string& word) {
        GluedAutomaton a = load_automaton(doc);
        Point out = auto_eval(a, split_word(word, a.alphabet));
        return a.profile == Profile::weighted ? rational_to_string(out.vector[0])
                                              : std::to_string(out.component);
    });
    m.def(
        "minimize",
        [](const std::string& doc, std::size_t budget) {
            MinimizeResult r = minimize(load_automaton(doc), budget);
            return py::make_tuple(serialize_document(Document(r.automaton)), r.exact);
        },
        py::arg("doc"), py::arg("budget") = 8);
    m.def(
        "reach",
        [](const std::string& doc, std::size_t budget) {
            ReachResult r = reach(load_automaton(doc), budget);
            return py::make_tuple(serialize_document(Document(r.automaton)), r.exact);
        },
        py::arg("doc"), py::arg("budget") = 8);
    m.def("obs", [](const std::string& doc) {
        return serialize_document(Document(obs(load_automaton(doc)).automaton));
    });
    m.def("equiv", [](const std::string& doc_a, const std::string& doc_b) {
        return auto_equiv(load_automaton(doc_a), load_automaton(doc_b));
    });
    m.def("linearize", [](const std::string& doc) {
        return serialize_document(Document(linearize(load_automaton(doc))));
    });
    m.def("canonicalize", [](const std::string& doc) {
        return serialize_document(parse_document(doc));
    });
    m.def("stats", [](const std::string& doc) {
        GluedAutomaton a = load_automaton(doc);
        py::dict d;
        d["components"] = a.states.components.size();
        d["dims"] = a.states.components;
        d["total_dim"] = a.states.total_dim();
        d["gluings"] = a.states.gluings.size();
        return d;
    });
}
