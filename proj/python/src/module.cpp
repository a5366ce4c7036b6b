#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "flownet/commands.hpp"
#include "flownet/linalg.hpp"

namespace py = pybind11;
using namespace flownet;

namespace {

cmd::Options options(const std::optional<std::string>& ring, std::size_t degree = 0) {
  cmd::Options o;
  if (ring) o.ring = io::ring_from_string(*ring);
  o.degree = degree;
  return o;
}

py::tuple result(const cmd::RunResult& r) { return py::make_tuple(r.text(), r.exit_code); }

cmd::Document doc(const char* role, const std::string& text) { return cmd::inline_document(role, text); }

RatMatrix matrix(const std::string& text) { return io::matrix_from_json(io::Json::parse(text)); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact flow modules, obstructions and Kirchhoff laws (JSON in, JSON out)";

  m.def("basis", [](const std::string& network, std::optional<std::string> ring,
                    std::optional<std::set<std::string>> external) {
    cmd::Options o = options(ring);
    o.external_override = std::move(external);
    return result(cmd::basis(doc("network", network), o));
  }, py::arg("network"), py::arg("ring") = py::none(), py::arg("external") = py::none());

  m.def("obstruction", [](const std::string& network, std::optional<std::string> ring) {
    return result(cmd::obstruction(doc("network", network), options(ring)));
  }, py::arg("network"), py::arg("ring") = py::none());

  m.def("check", [](const std::string& network, const std::string& chain, std::optional<std::string> ring) {
    return result(cmd::check(doc("network", network), doc("chain", chain), options(ring)));
  }, py::arg("network"), py::arg("chain"), py::arg("ring") = py::none());

  m.def("solve2", [](const std::string& network, const std::string& gram, const std::string& potential) {
    return result(cmd::solve2(doc("network", network), doc("gram", gram), doc("potential", potential), {}));
  }, py::arg("network"), py::arg("gram"), py::arg("potential"));

  m.def("oracle", [](std::optional<std::string> network, std::optional<std::string> ring, std::uint64_t seed,
                     std::size_t count) {
    cmd::Options o = options(ring);
    o.seed = seed;
    o.count = count;
    std::optional<cmd::Document> d;
    if (network) d = doc("network", *network);
    return result(cmd::oracle(d, o));
  }, py::arg("network") = py::none(), py::arg("ring") = py::none(), py::arg("seed") = 0, py::arg("count") = 0);

  m.def("cover", [](const std::string& network, const std::string& covering) {
    return result(cmd::cover(doc("network", network), doc("covering", covering), {}));
  }, py::arg("network"), py::arg("covering"));

  m.def("colim", [](const std::string& category, const std::string& functor, std::size_t degree,
                    std::optional<std::string> ring) {
    return result(cmd::colim(doc("category", category), doc("functor", functor), options(ring, degree)));
  }, py::arg("category"), py::arg("functor"), py::arg("degree") = 0, py::arg("ring") = py::none());

  m.def("rank", [](const std::string& m) { return rank(matrix(m)); }, py::arg("matrix"));

  m.def("kernel", [](const std::string& m) { return io::to_json(kernel_basis(matrix(m))).dump(); },
        py::arg("matrix"));

  m.def("smith_diagonal", [](const std::string& m) {
    std::vector<std::string> out;
    for (const auto& x : smith_diagonal(to_integer_matrix(matrix(m)))) out.push_back(to_string(x));
    return out;
  }, py::arg("matrix"));
}
