// lat: command-line front end.
// Exit codes: 0 pass, 1 fail, 2 unknown, 3 usage.

#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "latrat/io.hpp"

using namespace latrat;

namespace {

constexpr int kPass = 0, kFail = 1, kUnknown = 2, kUsage = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string out;
  std::uint64_t seed = 0;
  long box = 3;
  std::size_t draws = 100000;
  std::size_t rank = 0;
  std::size_t candidates = 64;
  std::string table;
  std::string command;

  SearchBudget budget() const {
    SearchBudget b;
    b.seed = seed;
    b.box_radius = box;
    b.random_draws = draws;
    b.padding_rank = rank;
    b.max_candidates = candidates;
    return b;
  }
  ClassTable class_table() const {
    return table.empty() ? ClassTable::defaults() : class_table_from_json(read_json_file(table));
  }
};

void emit(const Common& c, Json result) {
  Json j = {{"tool", "lat"}, {"version", LATRAT_VERSION}, {"command", c.command},
            {"seed", c.seed}, {"result", std::move(result)}};
  if (c.out.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    write_json_file(c.out, j);
  }
}

// "3..31", "5", or "3,5,7"
std::vector<long> parse_range(const std::string& s) {
  std::vector<long> out;
  auto num = [&](const std::string& t) {
    std::size_t pos = 0;
    long v = 0;
    try {
      v = std::stol(t, &pos);
    } catch (const std::exception&) {
      throw UsageError("bad number \"" + t + "\"");
    }
    if (pos != t.size()) throw UsageError("bad number \"" + t + "\"");
    return v;
  };
  auto dots = s.find("..");
  if (dots != std::string::npos) {
    long a = num(s.substr(0, dots)), b = num(s.substr(dots + 2));
    if (a > b) throw UsageError("empty range " + s);
    for (long n = a; n <= b; n += 2) out.push_back(n);
    return out;
  }
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(num(item));
  return out;
}

CatalogName parse_name(const std::string& s) {
  auto c = catalog_name_from_string(s);
  if (!c) throw UsageError("unknown lattice name \"" + s + "\"");
  return *c;
}

// a JSON file, or NAME:n from the catalog
GLattice load_lattice(const std::string& spec, Json* raw = nullptr) {
  if (std::filesystem::exists(spec)) {
    Json j = read_json_file(spec);
    if (raw) *raw = j;
    return lattice_from_json(j.contains("result") ? j.at("result") : j);
  }
  auto colon = spec.rfind(':');
  if (colon == std::string::npos)
    throw UsageError("no such file and not NAME:n: \"" + spec + "\"");
  auto ns = parse_range(spec.substr(colon + 1));
  if (ns.size() != 1) throw UsageError("one n expected in \"" + spec + "\"");
  return build(parse_name(spec.substr(0, colon)), ns[0]);
}

GLattice lattice_arg(const std::string& in, const std::string& name, long n, Json* raw = nullptr) {
  if (!in.empty()) return load_lattice(in, raw);
  if (name.empty()) throw UsageError("give --in FILE|NAME:n or --name and --n");
  return build(parse_name(name), n);
}

int cmd_build(const Common& c, const std::string& name, long n) {
  GLattice m = build(parse_name(name), n);
  emit(c, to_json(m));
  return kPass;
}

int cmd_verify(const Common& c, const std::string& id, const std::string& range) {
  auto ns = parse_range(range);
  for (long n : ns)
    if (n < 3 || n % 2 == 0) throw UsageError("n must be odd and at least 3, got " + std::to_string(n));
  Json rows = Json::array();
  bool all = true;
  if (id == "L36") {
    for (long n : ns) {
      Int d1 = det(circulant(circulant_pattern_half(n)));
      Int d2 = det(circulant(circulant_pattern_unit(n)));
      bool ok = d1 == (n - 1) / 2 && d2 == -1;
      all = all && ok;
      rows.push_back({{"n", n}, {"part1_det", to_json(d1)}, {"part2_det", to_json(d2)}, {"ok", ok}});
    }
  } else {
    auto wid = witness_id_from_string(id);
    if (!wid) throw UsageError("unknown theorem id \"" + id + "\" (T34, T35, T37, L46, L36)");
    for (long n : ns) {
      Witness w = witness(*wid, n);
      auto check = verify_witness(w);
      Int d = det(w.change_of_basis);
      bool det_ok = true;
      switch (*wid) {
        case WitnessId::T34:
        case WitnessId::L46:
          det_ok = d == 1;
          break;
        case WitnessId::T35:
          det_ok = abs(d) == 1;
          break;
        case WitnessId::T37:
          det_ok = d == -1;
          break;
      }
      bool ok = check.ok && det_ok;
      all = all && ok;
      rows.push_back({{"n", n}, {"det", to_json(d)}, {"ok", ok}, {"detail", check.detail}});
    }
  }
  emit(c, {{"theorem", id}, {"all_pass", all}, {"cases", rows}});
  return all ? kPass : kFail;
}

int cmd_table(const Common& c, long p) {
  if (!is_prime(p) || p == 2) throw UsageError("p must be an odd prime, got " + std::to_string(p));
  std::vector<std::pair<CatalogName, GLattice>> census;
  try {
    census = lee_census(p, c.class_table());
  } catch (const LatticeError& e) {
    throw UsageError(e.what());
  }
  const std::set<CatalogName> expect_flabby{CatalogName::Z, CatalogName::ZH, CatalogName::V,
                                            CatalogName::Y0, CatalogName::Y1, CatalogName::Y2};
  Json rows = Json::array();
  bool match = true;
  for (const auto& [name, m] : census) {
    auto fl = is_flabby(m);
    auto co = is_coflabby(m);
    match = match && (static_cast<bool>(fl) == (expect_flabby.count(name) > 0));
    Json r = {{"name", to_string(name)},
              {"rank", m.rank()},
              {"flabby", fl.holds},
              {"coflabby", co.holds},
              {"cohomology", to_json(cohomology_table(m))}};
    if (!fl.holds) r["flabby_fails_at"] = {{"subgroup", fl.failing_subgroup}, {"hminus1", to_json(fl.value)}};
    if (!co.holds) r["coflabby_fails_at"] = {{"subgroup", co.failing_subgroup}, {"h1", to_json(co.value)}};
    rows.push_back(std::move(r));
  }
  emit(c, {{"p", p}, {"matches_expected_pattern", match}, {"rows", rows}});
  return match ? kPass : kFail;
}

int cmd_cohomology(const Common& c, const GLattice& m) {
  auto fl = is_flabby(m);
  auto co = is_coflabby(m);
  emit(c, {{"table", to_json(cohomology_table(m))}, {"flabby", fl.holds}, {"coflabby", co.holds},
           {"fingerprint", to_json(fingerprint(m))}});
  return kPass;
}

int cmd_resolve(const Common& c, const GLattice& m) {
  auto r = flabby_resolution(m);
  emit(c, to_json(r));
  return r.seq.verify() ? kPass : kFail;
}

int cmd_iso(const Common& c, const GLattice& a, const GLattice& b) {
  auto r = iso(a, b, c.budget());
  emit(c, to_json(r));
  switch (r.outcome) {
    case IsoOutcome::Iso:
      return kPass;
    case IsoOutcome::NonIso:
      return kFail;
    case IsoOutcome::Unknown:
      return kUnknown;
  }
  return kUnknown;
}

int cmd_classify(const Common& c, const GLattice& m, bool asserted, std::size_t points) {
  ClassifyOptions opt;
  opt.budget = c.budget();
  opt.asserted_nonprincipal = asserted;
  if (points) opt.principality.max_points = points;
  Verdict v = classify(m, c.class_table(), opt);
  Json j = to_json(v);
  j["lattice"] = m.name();
  j["group"] = m.group().name();
  emit(c, j);
  switch (v.status) {
    case Status::StablyRational:
      return kPass;
    case Status::NotStablyRational:
      return kFail;
    case Status::RetractRationalOnly:
    case Status::Unknown:
      return kUnknown;
  }
  return kUnknown;
}

int cmd_steinitz(const Common& c, const std::string& in, const std::string& ideal_path,
                 std::size_t points) {
  PrincipalityOptions opt;
  if (points) opt.max_points = points;
  if (!ideal_path.empty()) {
    IdealHNF i = ideal_from_json(read_json_file(ideal_path));
    auto r = principality(i, opt);
    Json j = {{"ideal", to_json(i)}, {"norm", to_json(i.norm())}, {"principal", r.found},
              {"points", r.points}};
    if (r.found) {
      Json g = Json::array();
      for (const auto& x : r.generator) g.push_back(to_json(x));
      j["generator"] = g;
    }
    emit(c, j);
    return r.found ? kPass : kUnknown;
  }
  GLattice m = load_lattice(in);
  if (m.group().is_dihedral() || !is_prime(m.group().n))
    throw UsageError("steinitz needs a C_p lattice");
  auto split = n0_and_n1(m);
  auto mod = ideal_module(m);
  auto cl = steinitz_class(m, opt);
  emit(c, {{"n0_rank", split.n0.rows()},
           {"n1_rank", split.n1.rows()},
           {"t", mod.t},
           {"torsion", to_json(mod.torsion.invariants())},
           {"class", to_json(cl)}});
  return cl.known_trivial ? kPass : kUnknown;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integral G-lattices, flabby resolutions and rationality verdicts"};
  app.require_subcommand(1);
  Common c;
  auto common = [&](CLI::App* s) {
    s->add_option("--out", c.out, "write JSON here instead of stdout");
    s->add_option("--seed", c.seed, "seed for randomized search");
    s->add_option("--budget-box", c.box, "coefficient box radius");
    s->add_option("--budget-draws", c.draws, "randomized search evaluations");
    s->add_option("--budget-rank", c.rank, "padding rank bound (0: 4 * rank)");
    s->add_option("--budget-candidates", c.candidates, "iso candidates per search");
    s->add_option("--table", c.table, "class number JSON");
  };

  std::string name, theorem, range = "3..31", in, a_spec, b_spec, ideal_path;
  long n = 0, p = 0;
  bool asserted = false;
  std::size_t points = 0;

  auto* b = app.add_subcommand("build", "emit a catalog lattice");
  b->alias("dump");
  b->add_option("--name", name, "catalog name")->required();
  b->add_option("--n", n, "odd n")->required();
  common(b);

  auto* v = app.add_subcommand("verify", "check a witness family or the circulant identities");
  v->add_option("theorem", theorem, "T34 | T35 | T37 | L46 | L36")->required();
  v->add_option("range", range, "odd n values: 3..31, 5 or 3,5,7");
  common(v);

  auto* t = app.add_subcommand("table", "flabby/coflabby table of the ten indecomposables");
  t->add_option("p", p, "odd prime")->required();
  common(t);

  auto* co = app.add_subcommand("cohomology", "Tate cohomology over all subgroup classes");
  co->add_option("--in", in, "lattice JSON or NAME:n");
  co->add_option("--name", name);
  co->add_option("--n", n);
  common(co);

  auto* r = app.add_subcommand("resolve", "flabby resolution");
  r->add_option("--in", in, "lattice JSON or NAME:n");
  r->add_option("--name", name);
  r->add_option("--n", n);
  common(r);

  auto* is = app.add_subcommand("iso", "isomorphism search with certificate");
  is->add_option("--a", a_spec, "lattice JSON or NAME:n")->required();
  is->add_option("--b", b_spec, "lattice JSON or NAME:n")->required();
  common(is);

  auto* cl = app.add_subcommand("classify", "rationality verdict");
  cl->add_option("--in", in, "lattice JSON or NAME:n");
  cl->add_option("--name", name);
  cl->add_option("--n", n);
  cl->add_flag("--assert-nonprincipal", asserted, "input has a non-principal Steinitz class");
  cl->add_option("--principality-points", points, "principality search budget");
  common(cl);

  auto* st = app.add_subcommand("steinitz", "Steinitz class of a C_p-lattice or principality of an ideal");
  st->add_option("--in", in, "lattice JSON or NAME:n");
  st->add_option("--ideal", ideal_path, "ideal JSON");
  st->add_option("--principality-points", points, "principality search budget");
  common(st);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e) == 0 ? 0 : kUsage;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*b) {
      c.command = "build";
      return cmd_build(c, name, n);
    }
    if (*v) {
      c.command = "verify";
      return cmd_verify(c, theorem, range);
    }
    if (*t) {
      c.command = "table";
      return cmd_table(c, p);
    }
    if (*co) {
      c.command = "cohomology";
      return cmd_cohomology(c, lattice_arg(in, name, n));
    }
    if (*r) {
      c.command = "resolve";
      return cmd_resolve(c, lattice_arg(in, name, n));
    }
    if (*is) {
      c.command = "iso";
      return cmd_iso(c, load_lattice(a_spec), load_lattice(b_spec));
    }
    if (*cl) {
      c.command = "classify";
      Json raw;
      GLattice m = lattice_arg(in, name, n, &raw);
      if (raw.is_object() && raw.value("asserted_nonprincipal", false)) asserted = true;
      return cmd_classify(c, m, asserted, points);
    }
    if (*st) {
      c.command = "steinitz";
      if (in.empty() && ideal_path.empty()) throw UsageError("give --in or --ideal");
      return cmd_steinitz(c, in, ideal_path, points);
    }
  } catch (const UsageError& e) {
    std::cerr << "lat: " << e.what() << "\n";
    return kUsage;
  } catch (const LatticeError& e) {
    std::cerr << "lat: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::InvalidArgument:
      case ErrorCode::Parse:
      case ErrorCode::Unsupported:
      case ErrorCode::GroupMismatch:
      case ErrorCode::Precondition:
        return kUsage;
      default:
        return kFail;
    }
  } catch (const std::exception& e) {
    std::cerr << "lat: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
