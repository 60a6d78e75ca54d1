#include <filesystem>
#include <cstdlib>
#include <fstream>

#include "doctest.h"
#include "latrat/io.hpp"

using namespace latrat;

TEST_CASE("integers") {
  CHECK(to_json(Int(-7)) == Json(-7));
  Int big("123456789012345678901234567890");
  CHECK(to_json(big).is_string());
  CHECK(int_from_json(to_json(big)) == big);
  CHECK(int_from_json(Json("-5")) == -5);
  CHECK_THROWS_AS(int_from_json(Json("x1")), LatticeError);
  CHECK_THROWS_AS(int_from_json(Json(1.5)), LatticeError);
}

TEST_CASE("matrices") {
  IntMatrix m = IntMatrix::from_rows({{1, -2, 3}, {0, 4, 5}});
  CHECK(matrix_from_json(to_json(m)) == m);
  CHECK(matrix_from_json(Json::array(), 3).cols() == 3);
  CHECK_THROWS_AS(matrix_from_json(Json::parse("[[1, 2], [3]]")), LatticeError);
}

TEST_CASE("lattices round-trip") {
  for (long p : {3L, 5L})
    for (auto c : all_catalog_names()) {
      GLattice m = build(c, p);
      GLattice back = lattice_from_json(to_json(m));
      CHECK(back.same_action(m));
      CHECK(back.name() == m.name());
      CHECK(back.group() == m.group());
    }
  GLattice z = regular_lattice(GroupSpec::cyclic(4));
  CHECK(lattice_from_json(to_json(z)).same_action(z));
}

TEST_CASE("malformed lattices are rejected") {
  Json j = to_json(build(CatalogName::Nplus, 3));
  Json bad = j;
  bad["sigma"] = to_json(IntMatrix::from_rows({{2, 0}, {0, 2}}));
  CHECK_THROWS_AS(lattice_from_json(bad), LatticeError);
  bad = j;
  bad.erase("tau");
  CHECK_THROWS_AS(lattice_from_json(bad), LatticeError);
  bad = j;
  bad["group"]["kind"] = "quaternion";
  CHECK_THROWS_AS(lattice_from_json(bad), LatticeError);
}

TEST_CASE("maps, cohomology, ideals, tables") {
  auto w = witness(WitnessId::T34, 5);
  LatticeMap f{w.lhs, w.rhs, w.intertwiner};
  auto back = map_from_json(to_json(f), w.lhs, w.rhs);
  CHECK(back.matrix == f.matrix);
  CHECK(back.is_equivariant());

  auto t = cohomology_table(build(CatalogName::Zminus, 5));
  auto tb = cohomology_from_json(to_json(t));
  REQUIRE(tb.rows.size() == t.rows.size());
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    CHECK(tb.rows[i].hminus1 == t.rows[i].hminus1);
    CHECK(tb.rows[i].h1 == t.rows[i].h1);
  }

  auto ps = primes_above(5, 11);
  REQUIRE_FALSE(ps.empty());
  CHECK(ideal_from_json(to_json(ps[0].first)) == ps[0].first);

  auto table = ClassTable::defaults();
  auto tb2 = class_table_from_json(to_json(table));
  CHECK(tb2.h_plus(23) == table.h_plus(23));
  CHECK(tb2.h(23) == table.h(23));
  auto one = class_table_from_json(Json::parse(R"({"p": 29, "h": 8, "h_plus": 1, "source": "x"})"));
  CHECK(one.h(29) == 8);
  auto unknown_h = class_table_from_json(Json::parse(R"([{"p": 163, "h": null, "h_plus": 4}])"));
  CHECK_FALSE(unknown_h.h(163).has_value());
  CHECK(unknown_h.h_plus(163) == 4);
}

TEST_CASE("fingerprints, multiplicities, budgets") {
  auto f = fingerprint(build(CatalogName::Y1, 3));
  CHECK(fingerprint_from_json(to_json(f)) == f);
  DecompositionMultiplicities d{1, 2, 3, 4};
  CHECK(multiplicities_from_json(to_json(d)) == d);
  SearchBudget b;
  b.seed = 99;
  b.box_radius = 2;
  auto bb = budget_from_json(to_json(b));
  CHECK(bb.seed == 99);
  CHECK(bb.box_radius == 2);
}

TEST_CASE("reports serialize") {
  auto v = classify(build(CatalogName::X, 3), ClassTable::defaults());
  Json j = to_json(v);
  CHECK(j.at("status") == "StablyRational");
  CHECK(j.contains("witness"));
  CHECK(to_json(flabby_resolution(build(CatalogName::R, 3))).contains("flabby_part"));
  CHECK(to_json(witness(WitnessId::L46, 3)).at("ok") == true);
}

TEST_CASE("files") {
  auto dir = std::filesystem::temp_directory_path() / "latrat_io_test";
  std::filesystem::create_directories(dir);
  auto path = (dir / "m.json").string();
  write_json_file(path, to_json(build(CatalogName::Y2, 5)));
  CHECK(lattice_from_json(read_json_file(path)).same_action(build(CatalogName::Y2, 5)));
  std::ofstream(dir / "bad.json") << "{not json";
  CHECK_THROWS_AS(read_json_file((dir / "bad.json").string()), LatticeError);
  CHECK_THROWS_AS(read_json_file((dir / "missing.json").string()), LatticeError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("golden census tables") {
  const bool regen = std::getenv("LATRAT_REGEN_GOLDEN") != nullptr;
  for (long p : {3L, 5L, 7L}) {
    Json rows = Json::array();
    for (const auto& [name, m] : lee_census(p))
      rows.push_back({{"name", to_string(name)},
                      {"flabby", is_flabby(m).holds},
                      {"coflabby", is_coflabby(m).holds},
                      {"cohomology", to_json(cohomology_table(m))}});
    std::string path = std::string(LATRAT_GOLDEN_DIR) + "/table_p" + std::to_string(p) + ".json";
    if (regen) {
      write_json_file(path, rows);
      continue;
    }
    CHECK_MESSAGE(read_json_file(path) == rows, path);
  }
}
