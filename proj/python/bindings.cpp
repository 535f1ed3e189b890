#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qbmap/bdg.hpp"
#include "qbmap/canonical.hpp"
#include "qbmap/contour.hpp"
#include "qbmap/counting.hpp"
#include "qbmap/enumerate.hpp"
#include "qbmap/lab.hpp"
#include "qbmap/metrics.hpp"
#include "qbmap/sampler.hpp"
#include "qbmap/saw.hpp"
#include "qbmap/serialize.hpp"
#include "qbmap/version.hpp"

namespace py = pybind11;
using namespace qbmap;

// Objects cross the boundary as JSON text in the library's own formats; the
// Python package decodes them.
namespace {

ForestBridge encoding(const std::string& text) { return forest_bridge_from_json(Json::parse(text)); }

}  // namespace

PYBIND11_MODULE(_qbmap, m) {
  m.doc() = "Quadrangulations with a boundary: sampling, bijections, metrics";
  m.attr("__version__") = version_tag();
  m.attr("rng_identifier") = Rng::kIdentifier;

  static py::exception<std::invalid_argument> invalid(m, "InvalidInput", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const std::invalid_argument& e) {
      py::set_error(invalid, e.what());
    } catch (const nlohmann::json::exception& e) {
      py::set_error(invalid, e.what());
    }
  });

  m.def("sample_encoding", [](int n, int sigma, std::uint64_t seed, std::uint64_t stream) {
    Rng rng(Seed{seed, stream});
    return forest_bridge_to_json(sample_encoding(n, sigma, rng)).dump();
  }, py::arg("n"), py::arg("sigma"), py::arg("seed"), py::arg("stream") = 0);
  m.def("sample_quadrangulation", [](int n, int sigma, std::uint64_t seed, std::uint64_t stream) {
    return map_to_json(sample_quadrangulation(n, sigma, Seed{seed, stream})).dump();
  }, py::arg("n"), py::arg("sigma"), py::arg("seed"), py::arg("stream") = 0);
  m.def("sample_bridge", [](int sigma, std::uint64_t seed, std::uint64_t stream) {
    const Bridge b = sample_bridge(sigma, Seed{seed, stream});
    return std::vector<int>(b.values().begin(), b.values().end());
  }, py::arg("sigma"), py::arg("seed"), py::arg("stream") = 0);

  m.def("bdg_forward", [](const std::string& fb) {
    const ForestBridge e = encoding(fb);
    return map_to_json(bdg_forward(e.forest, e.bridge)).dump();
  });
  m.def("bdg_inverse", [](const std::string& map) {
    return forest_bridge_to_json(bdg_inverse(pointed_map_from_json(Json::parse(map)))).dump();
  });
  m.def("quadrangulation_to_saw", [](const std::string& map) {
    return saw_to_json(quadrangulation_to_saw(map_from_json(Json::parse(map)))).dump();
  });
  m.def("saw_to_quadrangulation", [](const std::string& saw) {
    return map_to_json(saw_to_quadrangulation(saw_from_json(Json::parse(saw)))).dump();
  });

  m.def("facial_sequence", [](const std::vector<std::vector<int>>& trees) {
    return facial_sequence(ForestShape::from_trees(trees));
  });
  m.def("contour_pair", [](const std::string& fb) {
    const ContourPair cp = contour_pair(encoding(fb).forest);
    return py::make_tuple(cp.C, cp.L);
  });
  m.def("shifted_labels", [](const std::string& fb) {
    const ForestBridge e = encoding(fb);
    return shifted_labels(e.forest, e.bridge).values;
  });
  m.def("bridge_to_pm1", [](const std::vector<int>& b) { return bridge_to_pm1(Bridge(b)); });
  m.def("pm1_to_bridge", [](const std::vector<int>& pm1) {
    const Bridge b = pm1_to_bridge(pm1);
    return std::vector<int>(b.values().begin(), b.values().end());
  });

  m.def("bfs_distances", [](const std::string& map, int source) {
    return map_distances(map_from_json(Json::parse(map)), source);
  });
  m.def("canonical_code", [](const std::string& map) {
    return py::bytes(canonical_code(map_from_json(Json::parse(map))));
  });
  m.def("count_formula", [](const std::string& kind, int n, int sigma) {
    if (kind.size() != 1) throw std::invalid_argument("kind must be F, B or Q");
    return count_formula(kind[0], n, sigma).str();
  });
  m.def("enumerate_count", [](const std::string& kind, int n, int sigma) -> std::size_t {
    if (kind == "F") return enumerate_forests(n, sigma).size();
    if (kind == "B") return enumerate_bridges(sigma).size();
    if (kind == "Q") return enumerate_quadrangulations(n, sigma).size();
    throw std::invalid_argument("kind must be F, B or Q");
  });
  m.def("vervaat", &vervaat);

  m.def("run_experiment", [](const std::string& name, const std::vector<int>& n, const std::string& sigma_rule,
                             int replicas, std::uint64_t seed, int threads) {
    ExperimentConfig cfg;
    cfg.name = name;
    cfg.n = n;
    cfg.sigma_rule = SigmaRule::parse(sigma_rule);
    cfg.replicas = replicas;
    cfg.seed = seed;
    cfg.threads = threads;
    ExperimentResult res;
    {
      py::gil_scoped_release release;
      res = run_experiment(cfg);
    }
    return res.to_json().dump();
  }, py::arg("name"), py::arg("n"), py::arg("sigma_rule") = "sqrt:1", py::arg("replicas") = 10,
     py::arg("seed") = 1, py::arg("threads") = 1);
}
