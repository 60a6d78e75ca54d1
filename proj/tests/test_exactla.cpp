#include "doctest.h"
#include "latrat/exactla.hpp"
#include "oracles.hpp"

using namespace latrat;

namespace {

bool divisibility_chain(const std::vector<Int>& d) {
  for (std::size_t i = 0; i + 1 < d.size(); ++i) {
    if (d[i] < 0) return false;
    if (d[i] == 0) {
      if (d[i + 1] != 0) return false;
      continue;
    }
    if (d[i + 1] % d[i] != 0) return false;
  }
  return d.empty() || d.back() >= 0;
}

bool is_hermite(const IntMatrix& h) {
  std::size_t last_pivot = 0;
  bool seen_zero_row = false;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    std::size_t j = 0;
    while (j < h.cols() && h(i, j) == 0) ++j;
    if (j == h.cols()) {
      seen_zero_row = true;
      continue;
    }
    if (seen_zero_row) return false;
    if (i > 0 && j <= last_pivot) return false;
    if (h(i, j) <= 0) return false;
    for (std::size_t k = 0; k < i; ++k)
      if (h(k, j) < 0 || h(k, j) >= h(i, j)) return false;
    last_pivot = j;
  }
  return true;
}

}  // namespace

TEST_CASE("snf examples") {
  auto id = IntMatrix::identity(3);
  auto r = snf(id);
  CHECK(r.s == id);
  CHECK(r.u == id);
  CHECK(r.v == id);

  IntMatrix m{{2, 4}, {6, 8}};
  auto f = snf(m);
  CHECK(f.s == IntMatrix{{2, 0}, {0, 4}});
  CHECK(f.u * m * f.v == f.s);

  CHECK(snf(IntMatrix{{0}}).s == IntMatrix{{0}});
  auto e = snf(IntMatrix(0, 3));
  CHECK(e.s.rows() == 0);
  CHECK(e.v == IntMatrix::identity(3));
}

TEST_CASE("hnf examples") {
  IntMatrix m{{2, 0}, {1, 1}};
  auto r = hnf(m);
  CHECK(r.h == IntMatrix{{1, 1}, {0, 2}});
  CHECK(r.u * m == r.h);
  CHECK(hnf(IntMatrix::identity(4)).h == IntMatrix::identity(4));
  CHECK(hnf(IntMatrix(3, 2)).h.is_zero());
}

TEST_CASE("det examples") {
  CHECK(det(IntMatrix::identity(6)) == 1);
  // Circ(1,1,0,0,0)
  IntMatrix c(5, 5);
  std::vector<long> row{1, 1, 0, 0, 0};
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) c(i, j) = row[((i - j) % 5 + 5) % 5];
  CHECK(det(c) == 2);
  CHECK_THROWS_AS(det(IntMatrix(2, 3)), LatticeError);
  CHECK(det(IntMatrix(0, 0)) == 1);
}

TEST_CASE("kernel examples") {
  auto k = kernel_basis(IntMatrix{{1}, {1}});
  REQUIRE(k.rows() == 1);
  CHECK(((k(0, 0) == 1 && k(0, 1) == -1) || (k(0, 0) == -1 && k(0, 1) == 1)));
  CHECK(kernel_basis(IntMatrix::identity(3)).rows() == 0);

  // norm element on R at p = 3: sigma acts on Z[zeta_3] by the companion
  // matrix of x^2 + x + 1
  IntMatrix s{{0, -1}, {1, -1}};
  IntMatrix n = IntMatrix::identity(2) + s + s * s;
  CHECK(n.is_zero());
  CHECK(kernel_basis(n.transpose()).rows() == 2);
}

TEST_CASE("cokernel examples") {
  auto a = cokernel_invariants(IntMatrix{{2}});
  CHECK(a.torsion == std::vector<Int>{2});
  CHECK(a.free_rank == 0);
  auto b = cokernel_invariants(IntMatrix(0, 3));
  CHECK(b.free_rank == 3);
  CHECK(b.torsion.empty());
  auto c = cokernel_invariants(IntMatrix{{1, 1, 1}});
  CHECK(c.free_rank == 2);
  CHECK(c.torsion.empty());
}

TEST_CASE("abelian invariants normalization") {
  auto a = AbelianInvariants::from_divisors({Int(2), Int(3)});
  CHECK(a.torsion == std::vector<Int>{6});
  auto b = AbelianInvariants::from_divisors({Int(1), Int(4), Int(2)});
  CHECK(b.torsion == std::vector<Int>{2, 4});
  CHECK(b.to_string() == "Z/2 + Z/4");
  CHECK(AbelianInvariants{}.to_string() == "0");
}

TEST_CASE("solve, saturate, complete") {
  IntMatrix b{{1, 1, 0}, {0, 2, 2}};
  IntMatrix y{{2, 6, 4}};
  auto c = solve_left(b, y);
  REQUIRE(c);
  CHECK(*c * b == y);
  CHECK_FALSE(solve_left(b, IntMatrix{{0, 1, 1}}));

  auto s = saturate(b);
  CHECK(s.rows() == 2);
  CHECK(is_saturated(s));
  CHECK(solve_left(s, IntMatrix{{0, 1, 1}}));

  IntMatrix t{{2, 3}};
  CHECK(is_saturated(t));
  auto comp = complete_basis(t);
  CHECK(is_unimodular(vstack(t, comp)));

  IntMatrix ones{{1, 1, 1, 1}};
  auto comp2 = complete_basis(ones);
  CHECK(comp2 == IntMatrix{{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  CHECK_THROWS_AS(complete_basis(IntMatrix{{2, 4}}), LatticeError);
}

TEST_CASE("random snf / hnf / det / kernel properties") {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> dim(0, 8);
  for (int trial = 0; trial < 10000; ++trial) {
    std::size_t r = dim(rng), c = dim(rng);
    IntMatrix m = oracle::random_matrix(rng, r, c);
    auto f = snf(m);
    REQUIRE(f.u * m * f.v == f.s);
    CHECK(is_unimodular(f.u));
    CHECK(is_unimodular(f.v));
    auto d = f.diagonal();
    CHECK(divisibility_chain(d));
    for (std::size_t i = 0; i < f.s.rows(); ++i)
      for (std::size_t j = 0; j < f.s.cols(); ++j)
        if (i != j) CHECK(f.s(i, j) == 0);
    CHECK(elementary_divisors(m) == d);

    auto h = hnf(m);
    CHECK(h.u * m == h.h);
    CHECK(is_unimodular(h.u));
    CHECK(is_hermite(h.h));

    auto k = kernel_basis(m);
    if (r > 0) {
      CHECK((k * m).is_zero());
      CHECK(k.rows() + rank(m) == r);
      CHECK(is_saturated(k));
    }
    if (r == c) {
      Int dm = det(m);
      Int prod = 1;
      for (auto& x : d) prod *= x;
      CHECK(abs(dm) == prod);
      if (r <= 4) CHECK(dm == oracle::cofactor_det(m));
    }
    if (r <= 4 && c <= 4) CHECK(oracle::smith_by_minors(m) == d);
  }
}

TEST_CASE("inverse of unimodular") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    // product of random elementary matrices
    IntMatrix u = IntMatrix::identity(5);
    std::uniform_int_distribution<int> idx(0, 4), coef(-3, 3);
    for (int k = 0; k < 12; ++k) {
      int i = idx(rng), j = idx(rng);
      if (i == j) continue;
      IntMatrix e = IntMatrix::identity(5);
      e(i, j) = coef(rng);
      u = u * e;
    }
    CHECK(u * inverse_unimodular(u) == IntMatrix::identity(5));
  }
  CHECK_THROWS_AS(inverse_unimodular(IntMatrix{{2}}), LatticeError);
}
