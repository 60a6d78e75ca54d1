#pragma once

// Brute-force reference implementations used only by the test suites.

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "latrat/exactla.hpp"
#include "latrat/groups.hpp"

namespace oracle {

using latrat::Int;
using latrat::IntMatrix;

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r,
                               std::size_t c, long lo = -9, long hi = 9) {
  std::uniform_int_distribution<long> d(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

inline Int cofactor_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Int acc = 0;
  for (std::size_t j = 0; j < n; ++j) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0, kk = 0; k < n; ++k) {
        if (k == j) continue;
        minor(i - 1, kk++) = m(i, k);
      }
    Int term = m(0, j) * cofactor_det(minor);
    acc += (j % 2 == 0) ? term : Int(-term);
  }
  return acc;
}

inline void for_each_subset(std::size_t n, std::size_t k,
                            const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
    if (pos == k) {
      f(idx);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      idx[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
}

// Determinantal divisors: D_k = gcd of all k x k minors. The Smith diagonal
// is d_k = D_k / D_{k-1}.
inline std::vector<Int> smith_by_minors(const IntMatrix& m) {
  const std::size_t kmax = std::min(m.rows(), m.cols());
  std::vector<Int> out;
  Int prev = 1;
  for (std::size_t k = 1; k <= kmax; ++k) {
    Int g = 0;
    for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& rs) {
      for_each_subset(m.cols(), k, [&](const std::vector<std::size_t>& cs) {
        IntMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rs[i], cs[j]);
        Int d = cofactor_det(sub);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      });
    });
    if (g == 0) {
      out.push_back(0);
      prev = 0;
      continue;
    }
    out.push_back(prev == 0 ? Int(0) : Int(g / prev));
    prev = g;
  }
  return out;
}

// Every subgroup of a small group by closing all pairs of elements (C_n and
// D_n subgroups are generated by at most two elements).
inline std::set<std::vector<latrat::GroupElement>> all_subgroups(
    const latrat::GroupSpec& g) {
  auto els = latrat::elements(g);
  std::set<std::vector<latrat::GroupElement>> out;
  for (const auto& a : els)
    for (const auto& b : els) out.insert(latrat::closure(g, {a, b}));
  return out;
}

// Resultant of x^n - 1 and c(x) = prod over n-th roots of unity of c(zeta),
// computed as the determinant of the Sylvester matrix.
inline Int resultant_xn_minus_1(const std::vector<long>& c) {
  const std::size_t n = c.size();
  // trim trailing zeros to get the true degree of c
  std::size_t deg = n;
  while (deg > 0 && c[deg - 1] == 0) --deg;
  if (deg == 0) return 0;
  --deg;
  if (deg == 0) {
    Int r = 1;
    for (std::size_t i = 0; i < n; ++i) r *= c[0];
    return r;
  }
  // Sylvester matrix of f = x^n - 1 (degree n) and c (degree deg)
  const std::size_t size = n + deg;
  IntMatrix s(size, size);
  std::vector<long> f(n + 1, 0);
  f[0] = 1;
  f[n] = -1;  // coefficients from x^n down to x^0
  for (std::size_t i = 0; i < deg; ++i)
    for (std::size_t j = 0; j <= n; ++j) s(i, i + j) = f[j];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= deg; ++j) s(deg + i, i + j) = c[deg - j];
  return latrat::det(s);
}

}  // namespace oracle
