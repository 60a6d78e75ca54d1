#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "latrat/catalog.hpp"
#include "latrat/cohomology.hpp"
#include "oracles.hpp"

using namespace latrat;

namespace {

std::string matrix_text(const IntMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    os << "\n";
  }
  return os.str();
}

IntMatrix rows(std::initializer_list<std::initializer_list<long>> r) { return IntMatrix(r); }

// u_i = w_{h+i} - w_{h+1+i}, 1 <= i <= n-1, padded to width cols.
IntMatrix difference_rows(long n, std::size_t cols) {
  IntMatrix b(static_cast<std::size_t>(n - 1), cols);
  const long h = (n - 1) / 2;
  for (long i = 1; i < n; ++i) {
    b(i - 1, (h + i) % n) += 1;
    b(i - 1, (h + 1 + i) % n) -= 1;
  }
  return b;
}

bool same_cohomology(const GLattice& a, const GLattice& b) {
  auto ta = cohomology_table(a), tb = cohomology_table(b);
  for (std::size_t i = 0; i < ta.rows.size(); ++i)
    if (!(ta.rows[i].hminus1 == tb.rows[i].hminus1 && ta.rows[i].h0 == tb.rows[i].h0 &&
          ta.rows[i].h1 == tb.rows[i].h1))
      return false;
  return a.rank() == b.rank();
}

}  // namespace

TEST_CASE("named lattices") {
  auto np = build(CatalogName::Nplus, 5);
  CHECK(np.rank() == 4);
  CHECK(np.sigma() == rows({{0, 0, 0, -1}, {1, 0, 0, -1}, {0, 1, 0, -1}, {0, 0, 1, -1}}));
  CHECK(np.tau() == rows({{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}}));
  CHECK(build(CatalogName::Nminus, 5).tau() == -np.tau());

  auto mt = build(CatalogName::MplusTilde, 3);
  CHECK(mt.rank() == 4);
  CHECK(mt.sigma() == rows({{0, 0, 1, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}}));
  CHECK(mt.tau() == rows({{1, 0, 0, 1}, {0, 0, 1, 1}, {0, 1, 0, 1}, {0, 0, 0, -1}}));
  auto mmt = build(CatalogName::MminusTilde, 3);
  CHECK(mmt.tau() == rows({{-1, 0, 0, -1}, {0, 0, -1, -1}, {0, -1, 0, -1}, {0, 0, 0, 1}}));

  CHECK(build(CatalogName::Y2, 5).rank() == 10);
  CHECK(build(CatalogName::Y2, 5).is_permutation());
  CHECK(build(CatalogName::Mplus, 9).rank() == 9);
  CHECK(build(CatalogName::ZH, 7).rank() == 2);
  CHECK(build(CatalogName::ZGmodTau, 7).rank() == 7);

  CHECK_THROWS_AS(build(CatalogName::Mplus, 4), LatticeError);
  CHECK_THROWS_AS(build(CatalogName::R, 9), LatticeError);
  CHECK_NOTHROW(build(CatalogName::Nplus, 9));
  for (auto c : all_catalog_names()) CHECK(catalog_name_from_string(to_string(c)) == c);
}

TEST_CASE("extension structure of the matrix lattices") {
  for (long n = 3; n <= 11; n += 2) {
    auto mp = build(CatalogName::Mplus, n), mm = build(CatalogName::Mminus, n);
    IntMatrix u = difference_rows(n, n);
    // 0 -> N_- -> M_+ -> Z -> 0 and 0 -> N_+ -> M_- -> Z -> 0, entrywise
    CHECK(sublattice_action(mp, u).same_action(build(CatalogName::Nminus, n)));
    CHECK(sublattice_action(mm, u).same_action(build(CatalogName::Nplus, n)));
    auto qp = quotient_lattice(mp, u);
    CHECK(qp.rank() == 1);
    CHECK(qp.tau() == IntMatrix::identity(1));
    // no nonzero G-map M_- -> Z exists; the quotient is Z_-
    auto qm = quotient_lattice(mm, u);
    CHECK(qm.tau() == -IntMatrix::identity(1));

    // N_+ = M_+ / f(sigma) M_+ with w_i -> e_{i-1}, w_0 -> -sum e
    const std::size_t r = static_cast<std::size_t>(n - 1);
    IntMatrix proj(r, static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < r; ++i) proj(i, 0) = -1, proj(i, i + 1) = 1;
    auto np = build(CatalogName::Nplus, n), nm = build(CatalogName::Nminus, n);
    CHECK(np.sigma() * proj == proj * mp.sigma());
    CHECK(np.tau() * proj == proj * mp.tau());
    CHECK(nm.tau() * proj == proj * mm.tau());
    IntMatrix ones(1, static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) ones(0, i) = 1;
    CHECK(kernel_basis(proj.transpose()) == ones);

    // M~_- / N_+ and M~_+ / N_- are Z[H]
    auto mmt = build(CatalogName::MminusTilde, n), mpt = build(CatalogName::MplusTilde, n);
    IntMatrix ut = difference_rows(n, static_cast<std::size_t>(n + 1));
    auto zh = build(CatalogName::ZH, n);
    CHECK(sublattice_action(mmt, ut).same_action(build(CatalogName::Nplus, n)));
    CHECK(sublattice_action(mpt, ut).same_action(build(CatalogName::Nminus, n)));
    CHECK(same_cohomology(quotient_lattice(mmt, ut), zh));
    CHECK(same_cohomology(quotient_lattice(mpt, ut), zh));

    // M_+ inside M~_+ on the first n coordinates; the quotient is Z_-.
    IntMatrix first(static_cast<std::size_t>(n), static_cast<std::size_t>(n + 1));
    for (long i = 0; i < n; ++i) first(i, i) = 1;
    auto ext = extension_from_sublattice(mpt, first);
    CHECK(ext.verify());
    CHECK(ext.sub.same_action(mp));
    CHECK(ext.quotient.tau() == -IntMatrix::identity(1));
    auto ext2 = extension_from_sublattice(mmt, first);
    CHECK(ext2.sub.same_action(mm));
    CHECK(ext2.quotient.tau() == IntMatrix::identity(1));
  }
}

TEST_CASE("non-split extensions") {
  for (long p : {3L, 5L, 7L}) {
    auto nm = build(CatalogName::Nminus, p), np = build(CatalogName::Nplus, p);
    auto z = build(CatalogName::Z, p), zh = build(CatalogName::ZH, p);
    CHECK(ext1(z, nm) == AbelianInvariants::cyclic(p));
    CHECK(ext1(build(CatalogName::Zminus, p), np) == AbelianInvariants::cyclic(p));
    CHECK(ext1(z, np).is_trivial());
    CHECK(ext1(zh, nm) == AbelianInvariants::cyclic(p));
    CHECK(ext1(zh, np) == AbelianInvariants::cyclic(p));
    // split sums have different cohomology from the middle terms
    CHECK_FALSE(same_cohomology(build(CatalogName::MplusTilde, p), direct_sum(nm, zh)));
    CHECK_FALSE(same_cohomology(build(CatalogName::Mplus, p), direct_sum(nm, z)));
  }
}

TEST_CASE("circulant") {
  CHECK(circulant(std::vector<long>{1, 0, 0, 0, 0}) == IntMatrix::identity(5));
  CHECK(circulant(std::vector<long>{1, 2, 3}) == rows({{1, 3, 2}, {2, 1, 3}, {3, 2, 1}}));
  CHECK(det(circulant(circulant_pattern_half(5))) == 2);
  CHECK(circulant_pattern_unit(5) == std::vector<long>{-1, -1, 0, 1, 0});
  CHECK(det(circulant(circulant_pattern_unit(5))) == -1);
  for (long n = 3; n <= 101; n += 2) {
    CHECK(det(circulant(circulant_pattern_half(n))) == (n - 1) / 2);
    CHECK(det(circulant(circulant_pattern_unit(n))) == -1);
  }
}

TEST_CASE("circulant determinant against resultant") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-4, 4);
  for (int trial = 0; trial < 400; ++trial) {
    std::size_t n = 1 + trial % 15;
    std::vector<long> c(n);
    for (auto& x : c) x = d(rng);
    CHECK(det(circulant(c)) == oracle::resultant_xn_minus_1(c));
  }
}

TEST_CASE("witness matrices as printed") {
  CHECK(witness(WitnessId::T35, 3).change_of_basis ==
        rows({{0, 0, 1, 1, 0, 1, 0},
              {1, 0, 0, 1, 0, 0, 1},
              {0, 1, 0, 1, 1, 0, 0},
              {0, 0, -1, 0, 1, 0, 0},
              {-1, 0, 0, 0, 0, 1, 0},
              {0, -1, 0, 0, 0, 0, 1},
              {0, 0, 0, 1, 1, 1, 1}}));
  CHECK(witness(WitnessId::T37, 3).change_of_basis ==
        rows({{1, 0, 0, 0, 1, 0, 1, 1},
              {0, 1, 0, 0, 1, 1, 0, 1},
              {0, 0, 1, 0, 0, 1, 1, 1},
              {0, 1, 0, 1, 0, -1, -1, -1},
              {0, 0, 1, 1, -1, 0, -1, -1},
              {1, 0, 0, 1, -1, -1, 0, -1},
              {1, 1, 1, 1, 1, 1, 1, 1},
              {1, 1, 1, 2, -1, -1, -1, -2}}));
  CHECK(witness(WitnessId::L46, 3).change_of_basis ==
        rows({{1, 0, 1, 0}, {0, 1, 0, 1}, {-1, -1, 0, -1}, {1, 0, 1, 1}}));
  CHECK(witness(WitnessId::L46, 5).change_of_basis ==
        rows({{1, 0, 0, 0, 1, 0, 0, 0},
              {0, 1, 0, 0, 0, 1, 0, 0},
              {0, 0, 1, 0, 0, 0, 1, 0},
              {0, 0, 0, 1, 0, 0, 0, 1},
              {-1, -1, -1, -1, 0, -1, 0, 0},
              {1, 0, 0, 0, 0, 0, -1, 0},
              {0, 1, 0, 0, 0, 0, 0, -1},
              {0, 0, 1, 0, 1, 1, 1, 1}}));
  // T as displayed: top two rows all ones except the y column
  auto t = witness(WitnessId::T34, 5).change_of_basis;
  CHECK(t(0, 5) == 2);
  CHECK(t(1, 5) == 3);
  CHECK(t(2, 4) == 0);  // v_0 misses x
  for (long n = 3; n <= 15; n += 2) {
    CHECK(det(witness(WitnessId::T34, n).change_of_basis) == 1);
    CHECK(det(witness(WitnessId::T37, n).change_of_basis) == -1);
    CHECK(det(witness(WitnessId::L46, n).change_of_basis) == 1);
    CHECK(abs(det(witness(WitnessId::T35, n).change_of_basis)) == 1);
  }
}

TEST_CASE("witnesses verify") {
  for (long n = 3; n <= 31; n += 2)
    for (auto id : {WitnessId::T34, WitnessId::T35, WitnessId::T37, WitnessId::L46}) {
      auto w = witness(id, n);
      auto c = verify_witness(w);
      INFO(to_string(id) << " n=" << n << ": " << c.detail);
      CHECK(c.ok);
    }
  CHECK_THROWS_AS(witness(WitnessId::T34, 6), LatticeError);
}

TEST_CASE("perturbed witness is rejected") {
  auto w = witness(WitnessId::T34, 5);
  // an entry whose cofactor vanishes keeps det = 1
  bool done = false;
  for (std::size_t i = 0; i < w.intertwiner.rows() && !done; ++i)
    for (std::size_t j = 0; j < w.intertwiner.cols() && !done; ++j) {
      IntMatrix m = w.intertwiner;
      m(i, j) += 1;
      if (det(m) == 1) w.intertwiner = m, done = true;
    }
  REQUIRE(done);
  auto c = verify_witness(w);
  CHECK_FALSE(c.ok);
  CHECK(c.detail.find("relation") != std::string::npos);

  auto w2 = witness(WitnessId::T35, 3);
  w2.intertwiner(6, 6) += 1;  // breaks unimodularity
  CHECK_FALSE(verify_witness(w2).ok);

  auto w3 = witness(WitnessId::L46, 5);
  w3.intertwiner = w3.intertwiner.select_rows(0, 7);
  CHECK(verify_witness(w3).detail.find("shape") != std::string::npos);
}

TEST_CASE("golden witness files") {
  const bool regen = std::getenv("LATRAT_REGEN_GOLDEN") != nullptr;
  for (auto id : {WitnessId::T34, WitnessId::T35, WitnessId::T37, WitnessId::L46})
    for (long n : {3L, 5L}) {
      std::string path = std::string(LATRAT_GOLDEN_DIR) + "/" + to_string(id) + "_n" +
                         std::to_string(n) + ".txt";
      std::string text = matrix_text(witness(id, n).change_of_basis);
      if (regen) {
        std::ofstream(path) << text;
        continue;
      }
      std::ifstream in(path);
      REQUIRE_MESSAGE(in.good(), "missing " << path);
      std::stringstream ss;
      ss << in.rdbuf();
      CHECK_MESSAGE(ss.str() == text, path);
    }
}

TEST_CASE("census ranks") {
  auto ranks = [](long p) {
    std::vector<std::size_t> r;
    for (const auto& [name, m] : lee_census(p)) r.push_back(m.rank());
    std::sort(r.begin(), r.end());
    return r;
  };
  CHECK(ranks(3) == std::vector<std::size_t>{1, 1, 2, 2, 2, 3, 3, 4, 4, 6});
  CHECK(ranks(5) == std::vector<std::size_t>{1, 1, 2, 4, 4, 5, 5, 6, 6, 10});
  CHECK(lee_census(7).size() == 10);
  CHECK_THROWS_AS(lee_census(9), LatticeError);
}
