#include <map>

#include "doctest.h"
#include "latrat/groups.hpp"
#include "oracles.hpp"

using namespace latrat;

TEST_CASE("element counts") {
  CHECK(elements(GroupSpec::dihedral(5)).size() == 10);
  CHECK(elements(GroupSpec::cyclic(7)).size() == 7);
  auto d3 = elements(GroupSpec::dihedral(3));
  REQUIRE(d3.size() == 6);
  CHECK(d3.front() == identity_element());
  std::set<GroupElement> distinct(d3.begin(), d3.end());
  CHECK(distinct.size() == 6);
}

TEST_CASE("presentation relations") {
  for (long n = 1; n <= 12; ++n) {
    GroupSpec g = GroupSpec::dihedral(n);
    GroupElement s = sigma_element(), t = tau_element();
    GroupElement acc = identity_element();
    for (long i = 0; i < n; ++i) acc = multiply(g, acc, s);
    CHECK(acc == identity_element());
    CHECK(multiply(g, t, t) == identity_element());
    CHECK(multiply(g, multiply(g, t, s), t) == inverse(g, s));
  }
}

TEST_CASE("group axioms brute force") {
  for (long n = 1; n <= 9; ++n) {
    for (GroupSpec g : {GroupSpec::cyclic(n), GroupSpec::dihedral(n)}) {
      auto els = elements(g);
      for (auto a : els) {
        CHECK(multiply(g, a, inverse(g, a)) == identity_element());
        CHECK(multiply(g, identity_element(), a) == a);
        for (auto b : els)
          for (auto c : els)
            CHECK(multiply(g, multiply(g, a, b), c) ==
                  multiply(g, a, multiply(g, b, c)));
      }
    }
  }
}

TEST_CASE("subgroup class examples") {
  auto d5 = subgroup_classes(GroupSpec::dihedral(5));
  REQUIRE(d5.size() == 4);
  CHECK(d5[0].label == "1");
  CHECK(d5[1].label == "D_1");
  CHECK(d5[1].conjugate_count == 5);
  CHECK(d5[2].label == "C_5");
  CHECK(d5[3].label == "D_5");
  CHECK(d5[3].size() == 10);

  auto d15 = subgroup_classes(GroupSpec::dihedral(15));
  CHECK(d15.size() == 8);
  auto c4 = subgroup_classes(GroupSpec::cyclic(4));
  REQUIRE(c4.size() == 3);
  CHECK(c4[0].size() == 1);
  CHECK(c4[1].size() == 2);
  CHECK(c4[2].size() == 4);
}

TEST_CASE("conjugation") {
  GroupSpec g = GroupSpec::dihedral(3);
  auto classes = subgroup_classes(g);
  const auto& rot = find_subgroup(classes, "C_3");
  for (auto x : elements(g))
    CHECK(conjugate_subgroup(g, rot.representative, x) == rot.representative);
  const auto& refl = find_subgroup(classes, "D_1");
  auto conj = conjugate_subgroup(g, refl.representative, sigma_element());
  std::vector<GroupElement> expect{{0, 0}, {2, 1}};
  CHECK(conj == expect);
  CHECK(conjugate_subgroup(g, {identity_element()}, tau_element()) ==
        std::vector<GroupElement>{identity_element()});
}

TEST_CASE("subgroup classes match exhaustive enumeration") {
  for (long n = 1; n <= 15; ++n) {
    for (GroupSpec g : {GroupSpec::cyclic(n), GroupSpec::dihedral(n)}) {
      auto all = oracle::all_subgroups(g);
      auto classes = subgroup_classes(g);
      long total = 0;
      for (const auto& c : classes) total += c.conjugate_count;
      CHECK(total == static_cast<long>(all.size()));
      // each subgroup conjugate to exactly one representative
      auto els = elements(g);
      for (const auto& s : all) {
        int hits = 0;
        for (const auto& c : classes) {
          if (c.size() != s.size()) continue;
          bool conj = false;
          for (auto x : els)
            if (conjugate_subgroup(g, c.representative, x) == s) conj = true;
          hits += conj;
        }
        CHECK(hits == 1);
      }
      // conjugate_count is the orbit size
      for (const auto& c : classes) {
        std::set<std::vector<GroupElement>> orbit;
        for (auto x : els) orbit.insert(conjugate_subgroup(g, c.representative, x));
        CHECK(static_cast<long>(orbit.size()) == c.conjugate_count);
      }
    }
  }
}
