#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ptdfa/automaton.hpp"
#include "ptdfa/hopcroft.hpp"
#include "ptdfa/minimizer.hpp"
#include "ptdfa/oracle.hpp"
#include "ptdfa/preprocess.hpp"
#include "ptdfa/workload.hpp"

namespace py = pybind11;
using namespace ptdfa;

namespace {

PtDfa make_dfa(std::uint32_t states, std::uint32_t alphabet,
               const std::vector<std::tuple<State, Label, State>>& transitions, State initial,
               const std::vector<State>& finals) {
    RawDfa raw{states, alphabet, {}, initial, finals};
    raw.transitions.reserve(transitions.size());
    for (const auto& [tail, label, head] : transitions) {
        raw.transitions.push_back({tail, label, head});
    }
    return validate(std::move(raw));
}

py::dict stats_dict(const MinimizeStats& s) {
    py::dict d;
    d["states_in"] = s.states_in;
    d["transitions_in"] = s.transitions_in;
    d["alphabet"] = s.alphabet;
    d["states_work"] = s.states_work;
    d["transitions_work"] = s.transitions_work;
    d["states_out"] = s.states_out;
    d["transitions_out"] = s.transitions_out;
    d["block_splits"] = s.block_splits;
    d["splitter_splits"] = s.splitter_splits;
    d["scan_touches"] = s.scan_touches;
    d["smaller_half_touches"] = s.smaller_half_touches;
    d["millis"] = s.millis;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Minimization of deterministic automata with partial transition functions";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<UnreachableState>(m, "UnreachableState", PyExc_ValueError);
    py::register_exception<AlphabetMismatch>(m, "AlphabetMismatch", PyExc_ValueError);

    py::class_<PtDfa>(m, "PtDfa")
        .def(py::init(&make_dfa), py::arg("states"), py::arg("alphabet"), py::arg("transitions"),
             py::arg("initial"), py::arg("finals"))
        .def_property_readonly("num_states", &PtDfa::num_states)
        .def_property_readonly("alphabet_size", &PtDfa::alphabet_size)
        .def_property_readonly("num_transitions", &PtDfa::num_transitions)
        .def_property_readonly("initial", &PtDfa::initial)
        .def_property_readonly("transitions",
                               [](const PtDfa& d) {
                                   std::vector<std::tuple<State, Label, State>> out;
                                   for (const Transition& t : d.transitions()) {
                                       out.emplace_back(t.tail, t.label, t.head);
                                   }
                                   return out;
                               })
        .def_property_readonly("finals",
                               [](const PtDfa& d) { return std::vector<State>(d.finals().begin(), d.finals().end()); })
        .def("accepts", [](const PtDfa& d, const std::vector<Label>& word) { return accepts(d, word); })
        .def("__eq__", [](const PtDfa& a, const PtDfa& b) { return a == b; })
        .def("__str__", &serialize)
        .def("__repr__", [](const PtDfa& d) {
            return "<PtDfa states=" + std::to_string(d.num_states()) + " alphabet=" +
                   std::to_string(d.alphabet_size()) + " transitions=" + std::to_string(d.num_transitions()) + ">";
        });

    m.def("parse", [](const std::string& text) { return parse(text); }, py::arg("text"));
    m.def("serialize", &serialize, py::arg("dfa"));
    m.def("canonicalize", [](const PtDfa& d) { return ptdfa::canonicalize(d); }, py::arg("dfa"));
    m.def("is_isomorphic", &is_isomorphic, py::arg("a"), py::arg("b"));
    m.def("language_equal", &language_equal, py::arg("a"), py::arg("b"));
    m.def("relevant_states", &relevant_states, py::arg("dfa"));

    m.def(
        "minimize",
        [](const PtDfa& d, bool fifo) {
            MinimizeOptions options;
            options.order = fifo ? WorklistOrder::fifo : WorklistOrder::lifo;
            MinimizeResult r = [&] {
                py::gil_scoped_release release;
                return minimize(d, options);
            }();
            return py::make_tuple(std::move(r.dfa), stats_dict(r.stats));
        },
        py::arg("dfa"), py::arg("fifo") = false,
        "Returns (minimal automaton, counters dict).");
    m.def(
        "hopcroft_minimize",
        [](const PtDfa& d, std::size_t memory_limit_bytes) {
            MinimizeResult r = [&] {
                py::gil_scoped_release release;
                return hopcroft_minimize(d, HopcroftOptions{memory_limit_bytes});
            }();
            return py::make_tuple(std::move(r.dfa), stats_dict(r.stats));
        },
        py::arg("dfa"), py::arg("memory_limit_bytes") = 0);
    m.def("oracle_minimize", &oracle_minimize, py::arg("dfa"));

    m.def(
        "generate",
        [](std::uint32_t states, std::uint32_t alphabet, double density, std::uint32_t finals, std::uint64_t seed) {
            return generate({states, alphabet, density, finals, seed});
        },
        py::arg("states"), py::arg("alphabet"), py::arg("density"), py::arg("finals"), py::arg("seed") = 0);
}
