#include "doctest.h"
#include "latrat/cohomology.hpp"

using namespace latrat;

namespace {

IntMatrix ones_row(long n) {
  return IntMatrix::from_rows({std::vector<Int>(n, Int(1))});
}

GLattice n_plus(long p) { return quotient_lattice(induce(GroupSpec::dihedral(p), 1), ones_row(p)); }
GLattice n_minus(long p) { return quotient_lattice(induce(GroupSpec::dihedral(p), -1), ones_row(p)); }

}  // namespace

TEST_CASE("hminus1 examples") {
  GroupSpec g = GroupSpec::dihedral(3);
  auto cl = subgroup_classes(g);
  CHECK(tate_hminus1(n_plus(3), find_subgroup(cl, "C_3")) == AbelianInvariants::cyclic(3));
  for (long p : {3, 5}) {
    GroupSpec gp = GroupSpec::dihedral(p);
    for (const auto& s : subgroup_classes(gp))
      for (const auto& t : subgroup_classes(gp))
        CHECK(tate_hminus1(perm_lattice(gp, t), s).is_trivial());
  }
  CHECK(tate_hminus1(sign_lattice(g), find_subgroup(cl, "D_1")) == AbelianInvariants::cyclic(2));
}

TEST_CASE("h0 examples") {
  for (long n : {3, 5, 7}) {
    GroupSpec g = GroupSpec::dihedral(n);
    auto cl = subgroup_classes(g);
    CHECK(tate_h0(trivial_lattice(g), find_subgroup(cl, "C_" + std::to_string(n))) ==
          AbelianInvariants::cyclic(n));
    for (const auto& s : cl) CHECK(tate_h0(regular_lattice(g), s).is_trivial());
  }
  GroupSpec g3 = GroupSpec::dihedral(3);
  CHECK(tate_h0(sign_lattice(g3), whole_group(g3)).is_trivial());
}

TEST_CASE("h1 examples") {
  for (long p : {3, 5}) {
    GroupSpec g = GroupSpec::dihedral(p);
    CHECK(h1(sign_lattice(g), whole_group(g)) == AbelianInvariants::cyclic(2));
    for (const auto& s : subgroup_classes(g)) CHECK(h1(regular_lattice(g), s).is_trivial());
  }
  GroupSpec g = GroupSpec::dihedral(3);
  CHECK(h1(induce(g, -1), find_subgroup(subgroup_classes(g), "D_1")) == AbelianInvariants::cyclic(2));
}

TEST_CASE("flabby and coflabby predicates") {
  for (long p : {3, 5, 7}) {
    GroupSpec g = GroupSpec::dihedral(p);
    auto r = is_flabby(n_plus(p));
    CHECK_FALSE(r.holds);
    CHECK(r.failing_subgroup == "C_" + std::to_string(p));
    for (const auto& s : subgroup_classes(g)) CHECK(is_flabby(perm_lattice(g, s)));
    CHECK_FALSE(is_coflabby(sign_lattice(g)));
    CHECK(is_coflabby(regular_lattice(g)));
  }
  for (long p : {3, 5}) CHECK_FALSE(is_coflabby(induce(GroupSpec::dihedral(p), -1)));
}

TEST_CASE("ext1 examples") {
  for (long p : {3, 5}) {
    GroupSpec g = GroupSpec::dihedral(p);
    auto cl = subgroup_classes(g);
    CHECK(ext1(trivial_lattice(g), n_minus(p)) == AbelianInvariants::cyclic(p));
    CHECK(ext1(perm_lattice(g, find_subgroup(cl, "C_" + std::to_string(p))), n_minus(p)) ==
          AbelianInvariants::cyclic(p));
    for (const auto& a : {trivial_lattice(g), sign_lattice(g), n_plus(p)})
      CHECK(ext1(a, regular_lattice(g)).is_trivial());
  }
  CHECK_THROWS_AS(ext1(trivial_lattice(GroupSpec::dihedral(3)),
                       trivial_lattice(GroupSpec::dihedral(5))),
                  LatticeError);
}

TEST_CASE("h1 paths agree") {
  for (long n : {3, 4, 5, 6}) {
    GroupSpec g = GroupSpec::dihedral(n);
    std::vector<GLattice> ls{sign_lattice(g), induce(g, 1), induce(g, -1),
                             direct_sum(sign_lattice(g), induce(g, -1))};
    if (n % 2 == 1) ls.push_back(n_minus(n));
    for (const auto& m : ls)
      for (const auto& s : subgroup_classes(g)) CHECK(h1(m, s) == h1_bar(m, s));
  }
  GroupSpec c = GroupSpec::cyclic(6);
  GLattice m(c, IntMatrix{{0, -1}, {1, 1}});
  for (const auto& s : subgroup_classes(c)) CHECK(h1(m, s) == h1_bar(m, s));
}

TEST_CASE("conjugation invariance") {
  for (long n = 3; n <= 9; ++n) {
    GroupSpec g = GroupSpec::dihedral(n);
    std::vector<GLattice> ls{sign_lattice(g), induce(g, -1), induce(g, 1)};
    for (const auto& m : ls)
      for (const auto& s : subgroup_classes(g))
        for (auto x : elements(g)) {
          auto conj = make_subgroup(g, conjugate_subgroup(g, s.representative, x));
          CHECK(tate_hminus1(m, conj) == tate_hminus1(m, s));
          CHECK(tate_h0(m, conj) == tate_h0(m, s));
          CHECK(h1(m, conj) == h1(m, s));
        }
  }
}

TEST_CASE("additivity") {
  for (long p : {3, 5}) {
    GroupSpec g = GroupSpec::dihedral(p);
    std::vector<GLattice> ls{sign_lattice(g), n_plus(p), n_minus(p), induce(g, -1)};
    for (const auto& a : ls)
      for (const auto& b : ls) {
        auto ab = direct_sum(a, b);
        for (const auto& s : subgroup_classes(g)) {
          CHECK(tate_hminus1(ab, s) == direct_sum(tate_hminus1(a, s), tate_hminus1(b, s)));
          CHECK(tate_h0(ab, s) == direct_sum(tate_h0(a, s), tate_h0(b, s)));
          CHECK(h1(ab, s) == direct_sum(h1(a, s), h1(b, s)));
        }
      }
  }
}

TEST_CASE("table is finite") {
  GroupSpec g = GroupSpec::dihedral(5);
  auto t = cohomology_table(induce(g, -1));
  CHECK(t.rows.size() == 4);
  for (const auto& r : t.rows) {
    CHECK(r.hminus1.free_rank == 0);
    CHECK(r.h0.free_rank == 0);
    CHECK(r.h1.free_rank == 0);
  }
}
