// Python extension: text networks in, JSON verdict strings out.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qsr/netfile.hpp"
#include "qsr/solver.hpp"

namespace py = pybind11;
using namespace qsr;

namespace {

std::string propagated(const std::optional<JointNetwork>& out) {
  return out ? serialize_network(*out) : std::string();
}

}  // namespace

PYBIND11_MODULE(_qsr, m) {
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<StageError>(m, "StageError", PyExc_RuntimeError);

  m.def("normalize", [](const std::string& text) { return serialize_network(parse_network(text)); });

  m.def("check", [](const std::string& text, bool assume_h8) {
    const JointNetwork net = parse_network(text);
    SolveOptions opts;
    opts.assume_h8 = assume_h8;
    return verdict_json(check_general(net, opts), net);
  }, py::arg("text"), py::arg("assume_h8") = false);

  m.def("solve", [](const std::string& text, bool assume_h8) {
    const JointNetwork net = parse_network(text);
    SolveOptions opts;
    opts.assume_h8 = assume_h8;
    return verdict_json(decide_dir49(net, opts), net);
  }, py::arg("text"), py::arg("assume_h8") = false);

  m.def("epsilon", [](const std::string& text, const std::string& eps) {
    const JointNetwork net = parse_network(text);
    return verdict_json(epsilon_solve(net, parse_rational(eps)), net);
  }, py::arg("text"), py::arg("eps") = "1/100");

  m.def("bipath", [](const std::string& text) { return propagated(bipath_consistency(parse_network(text))); });
  m.def("biclose", [](const std::string& text) { return propagated(biclose(parse_network(text))); });

  m.def("gen", [](std::uint64_t seed, std::size_t n) { return format_instance(gen_instance(seed, n)); },
        py::arg("seed"), py::arg("n"));

  m.def("compose", [](const std::string& calculus, const std::string& a, const std::string& b) {
    const Calculus* c = calculus == "ia" ? &ia_calculus()
                        : calculus == "rcc8" ? &rcc8_calculus()
                        : calculus == "ra" ? &ra_calculus()
                                           : nullptr;
    if (!c) throw py::value_error("calculus must be ia, rcc8 or ra");
    auto basic = [&](const std::string& name) {
      for (std::size_t i = 0; i < c->size(); ++i)
        if (c->basic_name(i) == name) return c->basic(i);
      throw py::value_error("unknown basic relation " + name);
    };
    std::vector<std::string> out;
    for (auto k : c->compose_table(basic(a), basic(b)).basics()) out.push_back(c->basic_name(k));
    return out;
  });
}
