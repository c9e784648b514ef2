#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "afer/bound_engine.hpp"
#include "afer/bounds_core.hpp"
#include "afer/code_db.hpp"
#include "afer/linear_codes.hpp"
#include "afer/projective_geometry.hpp"

namespace py = pybind11;
using namespace afer;

namespace {

Database make_database(const std::string& fixtures_dir) {
  Database db;
  for (int q : {2, 3, 4, 5}) db.seed_two_dim(q, 200);
  SeedOptions opts;
  opts.fixtures_dir = fixtures_dir;
  opts.verify = false;
  db.seed_binary_tables(opts);
  return db;
}

py::dict tag_of(const GenMatrix& g) {
  auto wd = weight_distribution(g);
  py::dict out;
  out["n"] = g.n();
  out["k"] = g.k();
  out["q"] = g.q();
  out["d"] = wd.min_distance();
  out["e"] = wd.error_coefficient();
  out["weights"] = wd.counts;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "error-coefficient bounds for Griesmer optimal linear codes";

  m.def("griesmer_length", &griesmer_length, py::arg("k"), py::arg("d"), py::arg("q"));
  m.def("griesmer_max_distance", &griesmer_max_distance, py::arg("n"), py::arg("k"),
        py::arg("q"));
  m.def(
      "gamma",
      [](Int n, Int k, Int d, Int q) {
        auto r = afer::gamma(n, k, d, q);
        return py::make_tuple(r.value, r.fallback);
      },
      py::arg("n"), py::arg("k"), py::arg("d"), py::arg("q"));
  m.def(
      "adic_anti_expansion",
      [](Int d, Int k) {
        auto r = afer::adic_anti_expansion(d, k);
        return py::make_tuple(r.s, r.lambda);
      },
      py::arg("d"), py::arg("k"));
  m.def(
      "two_dim_optimal",
      [](Int n, Int q) {
        auto r = afer::two_dim_optimal(n, q);
        py::dict out;
        out["d"] = r.d;
        out["e"] = r.e;
        return out;
      },
      py::arg("n"), py::arg("q"));
  m.def(
      "afer_estimate",
      [](Int n, Int k, Int d, Int q, Int e, double ebn0) {
        return afer::afer_estimate(CodeParams{n, k, d, q, e}, ebn0);
      },
      py::arg("n"), py::arg("k"), py::arg("d"), py::arg("q"), py::arg("e"),
      py::arg("ebn0"));

  m.def(
      "enumerate_file",
      [](const std::string& path) { return tag_of(GenMatrix::read_file(path)); },
      py::arg("path"));
  m.def(
      "construct",
      [](const std::string& spec, Int s, Int k, Int q) {
        Int dim = k > 0 ? k : infer_construction_dimension(spec);
        auto g = to_generator_matrix(parse_construction(spec, dim, q, s));
        py::dict out = tag_of(g);
        std::ostringstream buf;
        g.write(buf);
        out["matrix"] = buf.str();
        return out;
      },
      py::arg("spec"), py::arg("s") = 0, py::arg("k") = 0, py::arg("q") = 2);
  m.def(
      "combined_bound",
      [](Int n, Int k, Int q, const std::string& fixtures_dir) {
        Database db = make_database(fixtures_dir);
        RankCapRegistry registry;
        auto cb = afer::combined_bound(n, k, q, db, registry);
        return py::module_::import("json").attr("loads")(cb.to_json().dump());
      },
      py::arg("n"), py::arg("k"), py::arg("q"), py::arg("fixtures_dir") = "fixtures");
  m.def(
      "build_database",
      [](Int k_max, Int q, Int n_max, const std::string& out_dir,
         const std::string& fixtures_dir) {
        Database db = make_database(fixtures_dir);
        RankCapRegistry registry;
        for (Int dim = 3; dim <= k_max; ++dim) db.build_dimension(dim, q, n_max, registry);
        db.save(out_dir);
        return (Int)db.size();
      },
      py::arg("k_max"), py::arg("q"), py::arg("n_max"), py::arg("out_dir"),
      py::arg("fixtures_dir") = "fixtures");
}
