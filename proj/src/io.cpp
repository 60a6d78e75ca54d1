#include "latrat/io.hpp"

#include <fstream>
#include <limits>

namespace latrat {

namespace {

[[noreturn]] void parse_error(const std::string& what) {
  throw LatticeError(ErrorCode::Parse, what);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_error(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace

Json to_json(const Int& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) {
    Int x;
    if (x.set_str(j.get<std::string>(), 10) != 0) parse_error("bad integer string");
    return x;
  }
  parse_error("expected an integer");
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) r.push_back(to_json(m(i, k)));
    rows.push_back(std::move(r));
  }
  return rows;
}

IntMatrix matrix_from_json(const Json& j, std::size_t cols_if_empty) {
  if (!j.is_array()) parse_error("matrix must be a list of rows");
  if (j.empty()) return IntMatrix(0, cols_if_empty);
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  IntMatrix m(j.size(), cols);
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != cols) parse_error("ragged matrix");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = int_from_json(j[i][k]);
  }
  return m;
}

Json to_json(const GroupSpec& g) {
  return {{"kind", g.is_dihedral() ? "dihedral" : "cyclic"}, {"n", g.n}};
}

GroupSpec group_from_json(const Json& j) {
  const std::string kind = field(j, "kind").get<std::string>();
  const long n = field(j, "n").get<long>();
  if (kind == "dihedral") return GroupSpec::dihedral(n);
  if (kind == "cyclic") return GroupSpec::cyclic(n);
  parse_error("unknown group kind \"" + kind + "\"");
}

Json to_json(const GLattice& m) {
  Json j = {{"group", to_json(m.group())}, {"rank", m.rank()}, {"sigma", to_json(m.sigma())}};
  if (m.group().is_dihedral()) j["tau"] = to_json(m.tau());
  if (!m.name().empty()) j["name"] = m.name();
  return j;
}

GLattice lattice_from_json(const Json& j) {
  GroupSpec g = group_from_json(field(j, "group"));
  const std::size_t r = field(j, "rank").get<std::size_t>();
  IntMatrix s = matrix_from_json(field(j, "sigma"));
  IntMatrix t;
  if (g.is_dihedral()) t = matrix_from_json(field(j, "tau"));
  if (r == 0) {
    s = IntMatrix(0, 0);
    if (g.is_dihedral()) t = IntMatrix(0, 0);
  }
  if (s.rows() != r || s.cols() != r || (g.is_dihedral() && (t.rows() != r || t.cols() != r)))
    parse_error("matrix shape does not match rank");
  std::string name = j.contains("name") ? j.at("name").get<std::string>() : std::string();
  return GLattice(g, s, t, name);
}

Json to_json(const LatticeMap& m) {
  return {{"source", m.source.name()}, {"target", m.target.name()}, {"matrix", to_json(m.matrix)}};
}

LatticeMap map_from_json(const Json& j, const GLattice& source, const GLattice& target) {
  IntMatrix m = matrix_from_json(field(j, "matrix"), source.rank());
  if (m.rows() != target.rank() || m.cols() != source.rank())
    parse_error("map shape does not match the lattices");
  return {source, target, m};
}

Json to_json(const AbelianInvariants& a) {
  Json t = Json::array();
  for (const auto& d : a.torsion) t.push_back(to_json(d));
  return {{"torsion", t}, {"free_rank", a.free_rank}, {"text", a.to_string()}};
}

AbelianInvariants invariants_from_json(const Json& j) {
  AbelianInvariants a;
  for (const auto& d : field(j, "torsion")) a.torsion.push_back(int_from_json(d));
  a.free_rank = field(j, "free_rank").get<std::size_t>();
  return a;
}

Json to_json(const CohomologyTable& t) {
  Json subs = Json::object();
  Json order = Json::array();
  for (const auto& r : t.rows) {
    subs[r.subgroup] = {{"hminus1", to_json(r.hminus1)}, {"h0", to_json(r.h0)}, {"h1", to_json(r.h1)}};
    order.push_back(r.subgroup);
  }
  return {{"lattice", t.lattice}, {"order", order}, {"subgroups", subs}};
}

CohomologyTable cohomology_from_json(const Json& j) {
  CohomologyTable t;
  t.lattice = field(j, "lattice").get<std::string>();
  const Json& subs = field(j, "subgroups");
  for (const auto& label : field(j, "order")) {
    const std::string l = label.get<std::string>();
    const Json& r = field(subs, l.c_str());
    t.rows.push_back({l, invariants_from_json(field(r, "hminus1")), invariants_from_json(field(r, "h0")),
                      invariants_from_json(field(r, "h1"))});
  }
  return t;
}

Json to_json(const IdealHNF& i) {
  return {{"p", i.p}, {"real_subfield", i.real_subfield}, {"basis", to_json(i.basis)}};
}

IdealHNF ideal_from_json(const Json& j) {
  const long p = field(j, "p").get<long>();
  const bool real = j.contains("real_subfield") && j.at("real_subfield").get<bool>();
  return make_ideal(p, matrix_from_json(field(j, "basis")), real);
}

Json to_json(const ClassEntry& e) {
  Json j = {{"p", e.p}, {"h_plus", e.h_plus}, {"source", e.source}};
  j["h"] = e.h ? Json(*e.h) : Json(nullptr);
  return j;
}

ClassEntry class_entry_from_json(const Json& j) {
  ClassEntry e;
  e.p = field(j, "p").get<long>();
  const Json& h = field(j, "h");
  if (!h.is_null()) e.h = h.get<long>();
  e.h_plus = field(j, "h_plus").get<long>();
  e.source = j.contains("source") ? j.at("source").get<std::string>() : std::string();
  return e;
}

Json to_json(const ClassTable& t) {
  Json out = Json::array();
  for (const auto& [p, e] : t.entries()) out.push_back(to_json(e));
  return out;
}

ClassTable class_table_from_json(const Json& j) {
  ClassTable t;
  if (j.is_array()) {
    for (const auto& e : j) t.set(class_entry_from_json(e));
  } else if (j.is_object() && j.contains("entries")) {
    for (const auto& e : j.at("entries")) t.set(class_entry_from_json(e));
  } else {
    t.set(class_entry_from_json(j));
  }
  return t;
}

Json to_json(const Fingerprint& f) {
  Json rows = Json::array();
  for (const auto& r : f.rows)
    rows.push_back({{"subgroup", r.subgroup},
                    {"fixed_rank", r.fixed_rank},
                    {"hminus1", to_json(r.hminus1)},
                    {"h0", to_json(r.h0)},
                    {"h1", to_json(r.h1)}});
  return {{"rank", f.rank}, {"rows", rows}};
}

Fingerprint fingerprint_from_json(const Json& j) {
  Fingerprint f;
  f.rank = field(j, "rank").get<std::size_t>();
  for (const auto& r : field(j, "rows"))
    f.rows.push_back({field(r, "subgroup").get<std::string>(), field(r, "fixed_rank").get<std::size_t>(),
                      invariants_from_json(field(r, "hminus1")), invariants_from_json(field(r, "h0")),
                      invariants_from_json(field(r, "h1"))});
  return f;
}

Json to_json(const DecompositionMultiplicities& d) {
  return {{"s0", d.s0}, {"s1", d.s1}, {"s2", d.s2}, {"t", d.t}};
}

DecompositionMultiplicities multiplicities_from_json(const Json& j) {
  return {field(j, "s0").get<long>(), field(j, "s1").get<long>(), field(j, "s2").get<long>(),
          field(j, "t").get<long>()};
}

Json to_json(const SearchBudget& b) {
  return {{"box_radius", b.box_radius},       {"random_draws", b.random_draws},
          {"padding_rank", b.padding_rank},   {"max_box", b.max_box},
          {"max_candidates", b.max_candidates}, {"max_hom_entries", b.max_hom_entries},
          {"seed", b.seed}};
}

SearchBudget budget_from_json(const Json& j) {
  SearchBudget b;
  b.box_radius = field(j, "box_radius").get<long>();
  b.random_draws = field(j, "random_draws").get<std::size_t>();
  b.padding_rank = field(j, "padding_rank").get<std::size_t>();
  b.max_box = field(j, "max_box").get<std::size_t>();
  b.max_candidates = field(j, "max_candidates").get<std::size_t>();
  b.max_hom_entries = field(j, "max_hom_entries").get<std::size_t>();
  b.seed = field(j, "seed").get<std::uint64_t>();
  return b;
}

Json to_json(const ExtensionSpec& e) {
  return {{"sub", to_json(e.sub)},
          {"total", to_json(e.total)},
          {"quotient", to_json(e.quotient)},
          {"inclusion", to_json(e.inclusion.matrix)},
          {"projection", to_json(e.projection.matrix)},
          {"verified", e.verify()}};
}

Json to_json(const Witness& w) {
  auto check = verify_witness(w);
  return {{"id", to_string(w.id)},
          {"n", w.n},
          {"lhs", to_json(w.lhs)},
          {"rhs", to_json(w.rhs)},
          {"change_of_basis", to_json(w.change_of_basis)},
          {"intertwiner", to_json(w.intertwiner)},
          {"det", to_json(det(w.change_of_basis))},
          {"ok", check.ok},
          {"detail", check.detail}};
}

Json to_json(const IsoResult& r) {
  Json j = {{"outcome", to_string(r.outcome)}, {"reason", r.reason}, {"tried", r.tried}};
  if (r.map) j["map"] = to_json(*r.map);
  return j;
}

Json to_json(const FlabbyResolution& r) {
  return {{"lattice", to_json(r.lattice)},
          {"perm_summands", r.perm_summands},
          {"perm", to_json(r.perm)},
          {"flabby_part", to_json(r.flabby_part)},
          {"inclusion", to_json(r.seq.inclusion.matrix)},
          {"projection", to_json(r.seq.projection.matrix)},
          {"exact", r.seq.verify()},
          {"flabby", static_cast<bool>(is_flabby(r.flabby_part))}};
}

Json to_json(const StablyPermWitness& w) {
  return {{"p1", w.p1.describe()}, {"p2", w.p2.describe()}, {"map", to_json(w.map)}};
}

Json to_json(const SteinitzClassRep& s) {
  Json j = {{"ideal", to_json(s.ideal)}, {"norm", to_json(s.ideal.norm())}, {"known_trivial", s.known_trivial}};
  if (s.generator) {
    Json g = Json::array();
    for (const auto& x : *s.generator) g.push_back(to_json(x));
    j["generator"] = g;
  } else {
    j["generator"] = nullptr;
  }
  return j;
}

Json to_json(const Verdict& v) {
  Json j = {{"status", to_string(v.status)},
            {"by_theorem", v.by_theorem},
            {"asserted", v.asserted},
            {"reason", v.reason},
            {"flabby_fingerprint", to_json(v.flabby_fingerprint)}};
  if (v.resolution) j["resolution"] = to_json(*v.resolution);
  if (v.witness) j["witness"] = to_json(*v.witness);
  if (v.stable_sequence) j["stable_sequence"] = to_json(*v.stable_sequence);
  if (v.steinitz) j["steinitz"] = to_json(*v.steinitz);
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LatticeError(ErrorCode::Parse, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw LatticeError(ErrorCode::Parse, path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw LatticeError(ErrorCode::Parse, "cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace latrat
