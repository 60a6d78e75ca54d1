// JSON-string bridge; python/latrat wraps it into dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "latrat/io.hpp"

namespace py = pybind11;
using namespace latrat;

namespace {

GLattice parse(const std::string& text) { return lattice_from_json(Json::parse(text)); }

CatalogName name_of(const std::string& s) {
  auto c = catalog_name_from_string(s);
  if (!c) throw LatticeError(ErrorCode::InvalidArgument, "unknown lattice name " + s);
  return *c;
}

std::string verify(const std::string& id, long n) {
  auto wid = witness_id_from_string(id);
  if (!wid) throw LatticeError(ErrorCode::InvalidArgument, "unknown witness " + id);
  auto w = witness(*wid, n);
  return to_json(w).dump();
}

std::string census(long p) {
  Json rows = Json::array();
  for (const auto& [name, m] : lee_census(p))
    rows.push_back({{"name", to_string(name)},
                    {"rank", m.rank()},
                    {"flabby", is_flabby(m).holds},
                    {"coflabby", is_coflabby(m).holds},
                    {"lattice", to_json(m)}});
  return rows.dump();
}

SearchBudget budget(std::uint64_t seed, std::size_t draws) {
  SearchBudget b;
  b.seed = seed;
  b.random_draws = draws;
  return b;
}

std::string classify_json(const std::string& m, bool asserted, std::uint64_t seed, std::size_t draws,
                          std::size_t points) {
  ClassifyOptions opt;
  opt.budget = budget(seed, draws);
  opt.asserted_nonprincipal = asserted;
  if (points) opt.principality.max_points = points;
  return to_json(classify(parse(m), ClassTable::defaults(), opt)).dump();
}

std::vector<std::string> strings(const std::vector<Int>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

}  // namespace

PYBIND11_MODULE(_latrat, m) {
  py::register_exception<LatticeError>(m, "LatticeError", PyExc_ValueError);
  m.attr("__version__") = LATRAT_VERSION;
  m.def("build", [](const std::string& name, long n) { return to_json(build(name_of(name), n)).dump(); });
  m.def("verify", &verify);
  m.def("census", &census);
  m.def("cohomology", [](const std::string& l) { return to_json(cohomology_table(parse(l))).dump(); });
  m.def("is_flabby", [](const std::string& l) { return is_flabby(parse(l)).holds; });
  m.def("is_coflabby", [](const std::string& l) { return is_coflabby(parse(l)).holds; });
  m.def("fingerprint", [](const std::string& l) { return to_json(fingerprint(parse(l))).dump(); });
  m.def("resolve", [](const std::string& l) { return to_json(flabby_resolution(parse(l))).dump(); });
  m.def("iso", [](const std::string& a, const std::string& b, std::uint64_t seed, std::size_t draws) {
    return to_json(iso(parse(a), parse(b), budget(seed, draws))).dump();
  });
  m.def("classify", &classify_json);
  m.def("elementary_divisors", [](const std::string& mat) {
    return strings(elementary_divisors(matrix_from_json(Json::parse(mat))));
  });
  m.def("det", [](const std::string& mat) { return det(matrix_from_json(Json::parse(mat))).get_str(); });
  m.def("circulant_det", [](const std::vector<long>& c) { return det(circulant(c)).get_str(); });
}
