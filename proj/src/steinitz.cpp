#include "latrat/steinitz.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>

namespace latrat {

namespace {

std::size_t deg_of(long p) { return static_cast<std::size_t>(p - 1); }

void check_prime_p(long p) {
  if (p < 3 || p % 2 == 0)
    throw LatticeError(ErrorCode::InvalidArgument, "p must be an odd prime");
  for (long d = 3; d * d <= p; d += 2)
    if (p % d == 0) throw LatticeError(ErrorCode::InvalidArgument, "p must be an odd prime");
}

bool odd_prime(long p) {
  if (p < 3 || p % 2 == 0) return false;
  for (long d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

IntMatrix row_of(const std::vector<Int>& v) { return IntMatrix::from_rows({v}); }

// ---- polynomials over F_ell, coefficients low to high ----

using Poly = std::vector<Int>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Int modp(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

Int inv_mod(const Int& a, const Int& m) {
  Int r;
  mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Poly poly_rem(Poly a, const Poly& b, const Int& ell) {
  trim(a);
  const std::size_t db = b.size() - 1;
  Int lead_inv = inv_mod(b.back(), ell);
  while (a.size() > db) {
    Int c = modp(a.back() * lead_inv, ell);
    std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = modp(a[shift + i] - c * b[i], ell);
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, const Int& ell) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  for (auto& x : c) x = modp(x, ell);
  return poly_rem(c, m, ell);
}

Poly poly_powmod(Poly a, Int e, const Poly& m, const Int& ell) {
  Poly r{1};
  a = poly_rem(a, m, ell);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = poly_mulmod(r, a, m, ell);
    e >>= 1;
    if (e > 0) a = poly_mulmod(a, a, m, ell);
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, const Int& ell) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_rem(a, b, ell);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Int li = inv_mod(a.back(), ell);
    for (auto& x : a) x = modp(x * li, ell);
  }
  return a;
}

Poly poly_div_exact(Poly a, const Poly& b, const Int& ell) {
  trim(a);
  const std::size_t db = b.size() - 1;
  Int lead_inv = inv_mod(b.back(), ell);
  Poly q(a.size() >= b.size() ? a.size() - db : 1, 0);
  while (a.size() > db) {
    Int c = modp(a.back() * lead_inv, ell);
    std::size_t shift = a.size() - 1 - db;
    q[shift] = c;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = modp(a[shift + i] - c * b[i], ell);
    trim(a);
  }
  trim(q);
  return q;
}

long mult_order(long ell_mod_p, long p) {
  long x = ell_mod_p % p, k = 1;
  while (x != 1) {
    x = x * (ell_mod_p % p) % p;
    ++k;
  }
  return k;
}

// Equal-degree factorization of a squarefree product of degree-f irreducibles.
void edf(const Poly& h, long f, const Int& ell, std::mt19937_64& rng, std::vector<Poly>& out) {
  const std::size_t d = h.size() - 1;
  if (d == static_cast<std::size_t>(f)) {
    out.push_back(h);
    return;
  }
  Int q;
  mpz_pow_ui(q.get_mpz_t(), ell.get_mpz_t(), static_cast<unsigned long>(f));
  for (;;) {
    Poly a(d);
    for (auto& c : a) {
      Int r = Int(static_cast<unsigned long>(rng()));
      r = (r << 64) + Int(static_cast<unsigned long>(rng()));
      c = modp(r, ell);
    }
    trim(a);
    if (a.empty()) continue;
    Poly t;
    if (ell == 2) {
      Poly s = a, acc = a;
      for (long i = 1; i < f; ++i) {
        s = poly_mulmod(s, s, h, ell);
        acc.resize(std::max(acc.size(), s.size()), 0);
        for (std::size_t k = 0; k < s.size(); ++k) acc[k] = modp(acc[k] + s[k], ell);
        trim(acc);
      }
      t = acc;
    } else {
      t = poly_powmod(a, (q - 1) / 2, h, ell);
      if (t.empty()) t = {Int(-1)};
      t[0] = modp(t[0] - 1, ell);
      trim(t);
    }
    Poly g = poly_gcd(h, t, ell);
    if (g.size() > 1 && g.size() < h.size()) {
      edf(g, f, ell, rng, out);
      edf(poly_div_exact(h, g, ell), f, ell, rng, out);
      return;
    }
  }
}

struct PrimeData {
  IdealHNF ideal;
  long f;
  Poly g;  // empty for the ramified prime
};

std::vector<PrimeData> prime_data(long p, const Int& ell) {
  std::vector<PrimeData> out;
  if (ell == p) {
    Cyc a(deg_of(p), 0);
    a[0] = 1;
    a[1] = -1;
    out.push_back({principal_ideal(p, a), 1, {}});
    return out;
  }
  long ellp = static_cast<long>(mpz_fdiv_ui(ell.get_mpz_t(), static_cast<unsigned long>(p)));
  long f = mult_order(ellp, p);
  if (f == p - 1) {
    out.push_back({principal_ideal(p, cyc_scale(cyc_one(p), ell)), f, {}});
    return out;
  }
  Poly phi(static_cast<std::size_t>(p), 1);
  std::mt19937_64 rng(0x5eed + static_cast<unsigned long>(p));
  std::vector<Poly> factors;
  edf(phi, f, ell, rng, factors);
  std::sort(factors.begin(), factors.end(), [](const Poly& a, const Poly& b) {
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  });
  for (auto& g : factors) {
    Cyc gc(deg_of(p), 0);
    for (std::size_t i = 0; i < g.size(); ++i) gc[i] = g[i];
    out.push_back({ideal_from_generators(p, {cyc_scale(cyc_one(p), ell), gc}), f, g});
  }
  return out;
}

std::vector<std::pair<Int, unsigned long>> factor_integer(Int n) {
  std::vector<std::pair<Int, unsigned long>> out;
  if (n < 0) n = -n;
  for (unsigned long d = 2; d < 1000000 && Int(d) * d <= n; ++d) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      unsigned long e = 0;
      while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
        n /= d;
        ++e;
      }
      out.emplace_back(Int(d), e);
    }
  }
  if (n > 1) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 0)
      throw LatticeError(ErrorCode::Unsupported, "module order has a large composite cofactor");
    out.emplace_back(n, 1);
  }
  return out;
}

IntMatrix matrix_poly(const Poly& g, const IntMatrix& z) {
  const std::size_t k = z.rows();
  IntMatrix acc(k, k);
  for (std::size_t i = g.size(); i-- > 0;) {
    acc = acc * z;
    for (std::size_t j = 0; j < k; ++j) acc(j, j) += g[i];
  }
  return acc;
}

// |{x : a x in L, s x in L} / L| for L = rowspan(rel), full rank.
Int kernel_size(const IntMatrix& rel, const IntMatrix& a, const Int& s) {
  const std::size_t k = rel.rows();
  IntMatrix big(2 * k, 3 * k);
  big.set_block(0, 0, a);
  big.set_block(k, 0, IntMatrix::identity(k).scaled(s));
  big.set_block(0, k, -rel.transpose());
  big.set_block(k, 2 * k, -rel.transpose());
  IntMatrix ker = kernel_basis(big.transpose());
  IntMatrix x = row_lattice_basis(ker.select_cols(0, k));
  Int dl = det(rel), dx = det(x);
  return abs(dl / dx);
}

IntMatrix conversion_real(long p) { return real_basis_in_power(p); }

Cyc real_to_power(long p, const std::vector<Int>& r) {
  IntMatrix c = conversion_real(p);
  IntMatrix v = row_of(r) * c;
  return v.row_vector(0);
}

std::vector<Int> power_to_real(long p, const Cyc& a) {
  auto sol = solve_left(conversion_real(p), row_of(a));
  if (!sol) throw LatticeError(ErrorCode::InvalidArgument, "element is not real");
  return sol->row_vector(0);
}

IntMatrix generator_rows(long p, const std::vector<Cyc>& gens) {
  std::vector<std::vector<Int>> rows;
  for (const auto& g : gens) {
    Cyc x = g;
    for (long j = 0; j < p - 1; ++j) {
      rows.push_back(x);
      x = cyc_mul(p, x, cyc_zeta_power(p, 1));
    }
  }
  return IntMatrix::from_rows(rows, deg_of(p));
}

// Small R-generating set of an ideal.
std::vector<Cyc> ideal_generators(const IdealHNF& i) {
  std::vector<Cyc> gens{cyc_scale(cyc_one(i.p), i.norm())};
  IdealHNF cur = principal_ideal(i.p, gens[0]);
  for (std::size_t r = 0; r < i.basis.rows() && !(cur == i); ++r) {
    Cyc b = i.basis.row_vector(r);
    if (ideal_contains(cur, b)) continue;
    gens.push_back(b);
    cur = ideal_from_generators(i.p, gens);
  }
  return gens;
}

double log_abs_norm(long p, const Cyc& a) {
  double acc = 0;
  for (long k = 1; k < p; ++k) {
    std::complex<double> s = 0;
    for (std::size_t j = 0; j < a.size(); ++j) {
      double ang = 2.0 * std::numbers::pi * static_cast<double>((static_cast<long>(j) * k) % p) /
                   static_cast<double>(p);
      s += a[j].get_d() * std::polar(1.0, ang);
    }
    acc += std::log(std::abs(s));
  }
  return acc;
}

double log_of(const Int& x) {
  long e = 0;
  double m = mpz_get_d_2exp(&e, x.get_mpz_t());
  return std::log(std::abs(m)) + static_cast<double>(e) * std::log(2.0);
}

// Fincke-Pohst enumeration of x != 0 (up to sign) with x^T q x <= bound.
// Stops early when visit returns true or the point budget is exhausted.
bool enumerate_short(const std::vector<std::vector<long double>>& gram, long double bound,
                     std::size_t max_points, std::size_t& points,
                     const std::function<bool(const std::vector<long>&)>& visit) {
  const std::size_t n = gram.size();
  std::vector<std::vector<long double>> q = gram;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      q[j][i] = q[i][j];
      q[i][j] = q[i][j] / q[i][i];
    }
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t l = k; l < n; ++l) q[k][l] -= q[k][i] * q[i][l];
  }
  std::vector<long> x(n, 0);
  bool stop = false;
  const long double eps = 1e-9L * (1 + bound);
  std::function<void(std::size_t, long double, bool)> rec = [&](std::size_t i, long double rem,
                                                                bool higher_zero) {
    if (stop) return;
    long double c = 0;
    for (std::size_t j = i + 1; j < n; ++j) c -= q[i][j] * x[j];
    long double r = std::sqrt(std::max<long double>(0, rem + eps) / q[i][i]);
    long lo = static_cast<long>(std::ceil(c - r)), hi = static_cast<long>(std::floor(c + r));
    if (higher_zero) lo = std::max(lo, 0L);
    for (long v = lo; v <= hi && !stop; ++v) {
      long double t = v - c;
      long double nrem = rem - q[i][i] * t * t;
      if (nrem < -eps) continue;
      x[i] = v;
      if (i == 0) {
        if (higher_zero && v == 0) continue;
        if (++points > max_points || visit(x)) stop = true;
      } else {
        rec(i - 1, nrem, higher_zero && v == 0);
      }
    }
    x[i] = 0;
  };
  if (n) rec(n - 1, bound, true);
  return stop;
}

IdealHNF ideal_power(const IdealHNF& a, unsigned long e) {
  IdealHNF r = unit_ideal(a.p);
  for (unsigned long i = 0; i < e; ++i) r = ideal_product(r, a);
  return r;
}

IdealHNF order_ideal_of(const GLattice& n, IdealModule* im_out = nullptr) {
  IdealModule im = ideal_module(n);
  IdealHNF o = im.t ? order_ideal(im.torsion) : unit_ideal(n.group().n);
  if (im_out) *im_out = std::move(im);
  return o;
}

}  // namespace

// ---- elements ----

Cyc cyc_reduce(long p, std::vector<Int> poly) {
  std::vector<Int> c(static_cast<std::size_t>(p), 0);
  for (std::size_t i = 0; i < poly.size(); ++i) c[i % static_cast<std::size_t>(p)] += poly[i];
  Cyc out(deg_of(p));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = c[i] - c[deg_of(p)];
  return out;
}

Cyc cyc_one(long p) {
  Cyc a(deg_of(p), 0);
  a[0] = 1;
  return a;
}

Cyc cyc_zeta_power(long p, long k) {
  std::vector<Int> poly(static_cast<std::size_t>(p), 0);
  poly[static_cast<std::size_t>(((k % p) + p) % p)] = 1;
  return cyc_reduce(p, poly);
}

Cyc cyc_mul(long p, const Cyc& a, const Cyc& b) {
  std::vector<Int> c(static_cast<std::size_t>(p), 0);
  const auto sp = static_cast<std::size_t>(p);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[(i + j) % sp] += a[i] * b[j];
  }
  return cyc_reduce(p, c);
}

Cyc cyc_add(const Cyc& a, const Cyc& b) {
  Cyc c = a;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
  return c;
}

Cyc cyc_scale(const Cyc& a, const Int& s) {
  Cyc c = a;
  for (auto& x : c) x *= s;
  return c;
}

Cyc cyc_galois(long p, const Cyc& a, long k) {
  std::vector<Int> c(static_cast<std::size_t>(p), 0);
  for (std::size_t j = 0; j < a.size(); ++j)
    c[static_cast<std::size_t>((static_cast<long>(j) * k % p + p) % p)] += a[j];
  return cyc_reduce(p, c);
}

Cyc cyc_conj(long p, const Cyc& a) { return cyc_galois(p, a, p - 1); }

IntMatrix mult_matrix(long p, const Cyc& a) {
  const std::size_t d = deg_of(p);
  IntMatrix m(d, d);
  Cyc x = a;
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) m(i, j) = x[i];
    x = cyc_mul(p, x, cyc_zeta_power(p, 1));
  }
  return m;
}

Int cyc_norm(long p, const Cyc& a) { return det(mult_matrix(p, a)); }

IntMatrix trace_gram(long p) {
  const std::size_t d = deg_of(p);
  IntMatrix g(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) g(i, j) = (i == j) ? p - 1 : -1;
  return g;
}

IntMatrix real_basis_in_power(long p) {
  const std::size_t m = static_cast<std::size_t>((p - 1) / 2);
  Cyc theta = cyc_add(cyc_zeta_power(p, 1), cyc_zeta_power(p, -1));
  std::vector<std::vector<Int>> rows;
  Cyc x = cyc_one(p);
  for (std::size_t j = 0; j < m; ++j) {
    rows.push_back(x);
    x = cyc_mul(p, x, theta);
  }
  return IntMatrix::from_rows(rows);
}

// ---- ideals ----

Int IdealHNF::norm() const { return abs(det(basis)); }

IdealHNF make_ideal(long p, const IntMatrix& rows, bool real_subfield) {
  check_prime_p(p);
  IdealHNF i;
  i.p = p;
  i.real_subfield = real_subfield;
  const std::size_t d = i.degree();
  if (rows.cols() != d)
    throw LatticeError(ErrorCode::DimensionMismatch, "ideal basis has the wrong width");
  i.basis = row_lattice_basis(rows);
  if (i.basis.rows() != d)
    throw LatticeError(ErrorCode::InvalidArgument, "ideal basis is not of full rank");
  std::vector<std::vector<Int>> images;
  if (!real_subfield) {
    for (std::size_t r = 0; r < d; ++r)
      images.push_back(cyc_mul(p, i.basis.row_vector(r), cyc_zeta_power(p, 1)));
  } else {
    Cyc theta = cyc_add(cyc_zeta_power(p, 1), cyc_zeta_power(p, -1));
    for (std::size_t r = 0; r < d; ++r)
      images.push_back(
          power_to_real(p, cyc_mul(p, real_to_power(p, i.basis.row_vector(r)), theta)));
  }
  if (!solve_left(i.basis, IntMatrix::from_rows(images)))
    throw LatticeError(ErrorCode::InvalidArgument, "basis is not closed under multiplication");
  return i;
}

IdealHNF unit_ideal(long p, bool real_subfield) {
  IdealHNF i;
  i.p = p;
  i.real_subfield = real_subfield;
  i.basis = IntMatrix::identity(i.degree());
  return i;
}

IdealHNF ideal_from_generators(long p, const std::vector<Cyc>& gens) {
  check_prime_p(p);
  IdealHNF i;
  i.p = p;
  i.basis = row_lattice_basis(generator_rows(p, gens));
  if (i.basis.rows() != deg_of(p))
    throw LatticeError(ErrorCode::InvalidArgument, "zero ideal");
  return i;
}

IdealHNF real_ideal_from_generators(long p, const std::vector<std::vector<Int>>& gens) {
  check_prime_p(p);
  const std::size_t m = static_cast<std::size_t>((p - 1) / 2);
  Cyc theta = cyc_add(cyc_zeta_power(p, 1), cyc_zeta_power(p, -1));
  std::vector<std::vector<Int>> rows;
  for (const auto& g : gens) {
    Cyc x = real_to_power(p, g);
    for (std::size_t j = 0; j < m; ++j) {
      rows.push_back(power_to_real(p, x));
      x = cyc_mul(p, x, theta);
    }
  }
  IdealHNF i;
  i.p = p;
  i.real_subfield = true;
  i.basis = row_lattice_basis(IntMatrix::from_rows(rows, m));
  if (i.basis.rows() != m) throw LatticeError(ErrorCode::InvalidArgument, "zero ideal");
  return i;
}

IdealHNF principal_ideal(long p, const Cyc& a) { return ideal_from_generators(p, {a}); }

IdealHNF ideal_product(const IdealHNF& a, const IdealHNF& b) {
  if (a.p != b.p || a.real_subfield || b.real_subfield)
    throw LatticeError(ErrorCode::InvalidArgument, "ideal product needs ideals of one Z[zeta_p]");
  std::vector<std::vector<Int>> rows;
  // R-generators of one factor suffice against a Z-basis of the other.
  for (const auto& g : ideal_generators(a))
    for (std::size_t j = 0; j < b.basis.rows(); ++j)
      rows.push_back(cyc_mul(a.p, g, b.basis.row_vector(j)));
  IdealHNF r;
  r.p = a.p;
  r.basis = row_lattice_basis(IntMatrix::from_rows(rows));
  return r;
}

bool ideal_contains(const IdealHNF& i, const Cyc& x) {
  return solve_left(i.basis, row_of(x)).has_value();
}

IdealHNF integral_inverse(const IdealHNF& i) {
  if (i.real_subfield) throw LatticeError(ErrorCode::Unsupported, "inverse of a real ideal");
  const long p = i.p;
  const std::size_t d = deg_of(p);
  Int nrm = i.norm();
  if (nrm == 1) return unit_ideal(p);
  std::vector<Cyc> gens = ideal_generators(i);
  // x with g x in N R for every generator g (g = N is automatic)
  std::vector<IntMatrix> blocks;
  for (std::size_t k = 1; k < gens.size(); ++k) blocks.push_back(mult_matrix(p, gens[k]));
  if (blocks.empty()) return unit_ideal(p);
  const std::size_t md = blocks.size() * d;
  IntMatrix big(md, d + md);
  for (std::size_t k = 0; k < blocks.size(); ++k) big.set_block(k * d, 0, blocks[k]);
  big.set_block(0, d, IntMatrix::identity(md).scaled(nrm));
  IntMatrix ker = kernel_basis(big.transpose());
  IdealHNF r;
  r.p = p;
  r.basis = row_lattice_basis(ker.select_cols(0, d));
  return r;
}

IdealHNF extend_to_full(const IdealHNF& a) {
  if (!a.real_subfield) return a;
  std::vector<Cyc> gens;
  for (std::size_t r = 0; r < a.basis.rows(); ++r)
    gens.push_back(real_to_power(a.p, a.basis.row_vector(r)));
  return ideal_from_generators(a.p, gens);
}

Int rational_part(const IdealHNF& i) {
  const std::size_t d = i.basis.cols();
  if (d == 1) return abs(i.basis(0, 0));
  IntMatrix k = kernel_basis(i.basis.select_cols(1, d));
  IntMatrix v = k * i.basis;
  return abs(v(0, 0));
}

std::vector<std::pair<IdealHNF, long>> primes_above(long p, const Int& ell) {
  check_prime_p(p);
  std::vector<std::pair<IdealHNF, long>> out;
  for (auto& pd : prime_data(p, ell)) out.emplace_back(std::move(pd.ideal), pd.f);
  return out;
}

GLattice ideal_lattice(const IdealHNF& i) {
  const IdealHNF full = extend_to_full(i);
  const long p = full.p;
  std::vector<std::vector<Int>> z;
  for (std::size_t r = 0; r < full.basis.rows(); ++r)
    z.push_back(cyc_mul(p, full.basis.row_vector(r), cyc_zeta_power(p, 1)));
  auto c = solve_left(full.basis, IntMatrix::from_rows(z));
  return GLattice(GroupSpec::cyclic(p), c->transpose(), {}, "ideal");
}

GLattice ideal_lattice_dihedral(const IdealHNF& i) {
  const IdealHNF full = extend_to_full(i);
  const long p = full.p;
  std::vector<std::vector<Int>> z, t;
  for (std::size_t r = 0; r < full.basis.rows(); ++r) {
    z.push_back(cyc_mul(p, full.basis.row_vector(r), cyc_zeta_power(p, 1)));
    t.push_back(cyc_conj(p, full.basis.row_vector(r)));
  }
  auto cz = solve_left(full.basis, IntMatrix::from_rows(z));
  auto ct = solve_left(full.basis, IntMatrix::from_rows(t));
  if (!ct) throw LatticeError(ErrorCode::NotStable, "ideal is not stable under conjugation");
  return GLattice(GroupSpec::dihedral(p), cz->transpose(), ct->transpose(), "ideal");
}

// ---- reduction and search ----

LLLResult lll_reduce(const IntMatrix& b0, const IntMatrix& gram) {
  const std::size_t n = b0.rows();
  IntMatrix b = b0;
  IntMatrix u = IntMatrix::identity(n);
  if (n == 0) return {b, u};
  auto dot = [&](std::size_t i, std::size_t j) {
    Int s = 0;
    for (std::size_t a = 0; a < b.cols(); ++a) {
      if (b(i, a) == 0) continue;
      Int t = 0;
      for (std::size_t c = 0; c < b.cols(); ++c) t += gram(a, c) * b(j, c);
      s += b(i, a) * t;
    }
    return s;
  };
  // 1-based d and lambda as in the integral algorithm
  std::vector<Int> d(n + 1, 0);
  std::vector<std::vector<Int>> lam(n + 1, std::vector<Int>(n + 1, 0));
  d[0] = 1;
  d[1] = dot(0, 0);
  std::size_t k = 2, kmax = 1;
  auto row_sub = [&](IntMatrix& m, std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) -= q * m(src, c);
  };
  auto red = [&](std::size_t kk, std::size_t l) {
    Int two = 2 * lam[kk][l];
    if (abs(two) > d[l]) {
      // nearest integer to lam / d
      Int q;
      Int num = 2 * lam[kk][l] + d[l];
      Int den = 2 * d[l];
      mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      row_sub(b, kk - 1, l - 1, q);
      row_sub(u, kk - 1, l - 1, q);
      lam[kk][l] -= q * d[l];
      for (std::size_t i = 1; i < l; ++i) lam[kk][i] -= q * lam[l][i];
    }
  };
  auto swap = [&](std::size_t kk) {
    b.swap_rows(kk - 1, kk - 2);
    u.swap_rows(kk - 1, kk - 2);
    for (std::size_t j = 1; j + 2 <= kk; ++j) std::swap(lam[kk][j], lam[kk - 1][j]);
    Int l = lam[kk][kk - 1];
    Int bb = (d[kk - 2] * d[kk] + l * l) / d[kk - 1];
    for (std::size_t i = kk + 1; i <= kmax; ++i) {
      Int t = lam[i][kk];
      lam[i][kk] = (d[kk] * lam[i][kk - 1] - l * t) / d[kk - 1];
      lam[i][kk - 1] = (bb * t + l * lam[i][kk]) / d[kk];
    }
    d[kk - 1] = bb;
  };
  while (k <= n) {
    if (k > kmax) {
      kmax = k;
      for (std::size_t j = 1; j <= k; ++j) {
        Int v = dot(k - 1, j - 1);
        for (std::size_t i = 1; i < j; ++i) v = (d[i] * v - lam[k][i] * lam[j][i]) / d[i - 1];
        if (j < k)
          lam[k][j] = v;
        else
          d[k] = v;
      }
      if (d[k] == 0) throw LatticeError(ErrorCode::InvalidArgument, "LLL input is dependent");
    }
    for (;;) {
      red(k, k - 1);
      if (4 * d[k] * d[k - 2] < 3 * d[k - 1] * d[k - 1] - 4 * lam[k][k - 1] * lam[k][k - 1]) {
        swap(k);
        if (k > 2) --k;
        continue;
      }
      for (std::size_t l = k - 1; l-- > 1;) red(k, l);
      ++k;
      break;
    }
  }
  return {b, u};
}

Principality principality(const IdealHNF& i0, const PrincipalityOptions& opt) {
  const IdealHNF i = extend_to_full(i0);
  const long p = i.p;
  Principality res;
  Int nrm = i.norm();
  if (nrm == 1) {
    res.found = true;
    res.generator = cyc_one(p);
    return res;
  }
  const IntMatrix tg = trace_gram(p);
  LLLResult red = lll_reduce(i.basis, tg);
  const IntMatrix& b = red.basis;
  const std::size_t d = b.rows();
  IntMatrix g = b * tg * b.transpose();
  std::vector<std::vector<long double>> q(d, std::vector<long double>(d));
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) q[r][c] = static_cast<long double>(g(r, c).get_d());
  const double lognorm = log_of(nrm);
  const double base = static_cast<double>(d) * std::exp(2.0 * lognorm / static_cast<double>(d));
  std::size_t used = 0;
  auto visit = [&](const std::vector<long>& x) {
    Cyc v(d, 0);
    for (std::size_t r = 0; r < d; ++r)
      if (x[r])
        for (std::size_t c = 0; c < d; ++c) v[c] += x[r] * b(r, c);
    if (std::abs(log_abs_norm(p, v) - lognorm) > 1e-6 * (1 + lognorm)) return false;
    if (abs(cyc_norm(p, v)) != nrm) return false;
    if (!(principal_ideal(p, v) == i)) return false;
    res.found = true;
    res.generator = v;
    return true;
  };
  for (double f : opt.factors) {
    std::size_t pts = 0;
    enumerate_short(q, static_cast<long double>(f * base), opt.max_points, pts, visit);
    used += pts;
    if (res.found || pts > opt.max_points) break;
  }
  res.points = used;
  return res;
}

// ---- modules ----

Int TorsionModule::order() const { return invariants().order(); }

IdealHNF order_ideal(const TorsionModule& t) {
  const long p = t.p;
  Int ord = t.order();
  if (ord == 0) throw LatticeError(ErrorCode::InvalidArgument, "module is not finite");
  IdealHNF acc = unit_ideal(p);
  if (ord == 1) return acc;
  for (const auto& [ell, v] : factor_integer(ord)) {
    auto primes = prime_data(p, ell);
    if (primes.size() == 1) {
      const long f = primes[0].f;
      if (v % static_cast<unsigned long>(f) != 0)
        throw LatticeError(ErrorCode::NotExact, "module order is not a norm");
      acc = ideal_product(acc, ideal_power(primes[0].ideal, v / static_cast<unsigned long>(f)));
      continue;
    }
    Int s;
    mpz_pow_ui(s.get_mpz_t(), ell.get_mpz_t(), v);
    for (const auto& pd : primes) {
      Poly gp = pd.g;
      Poly ge{1};
      for (unsigned long e = 0; e < v; ++e) {
        Poly c(ge.size() + gp.size() - 1, 0);
        for (std::size_t a = 0; a < ge.size(); ++a)
          for (std::size_t b = 0; b < gp.size(); ++b) c[a + b] += ge[a] * gp[b];
        ge = std::move(c);
      }
      IntMatrix a = matrix_poly(ge, t.zeta);
      Int size = kernel_size(t.relations, a, s);
      // size = ell^(f * len)
      unsigned long len = 0;
      Int q;
      mpz_pow_ui(q.get_mpz_t(), ell.get_mpz_t(), static_cast<unsigned long>(pd.f));
      while (size > 1) {
        if (size % q != 0) throw LatticeError(ErrorCode::NotExact, "length count is not a power");
        size /= q;
        ++len;
      }
      acc = ideal_product(acc, ideal_power(pd.ideal, len));
    }
  }
  if (acc.norm() != ord)
    throw LatticeError(ErrorCode::NotExact, "order ideal norm does not match module order");
  return acc;
}

N0N1 n0_and_n1(const GLattice& n) {
  if (n.group().is_dihedral() || !odd_prime(n.group().n))
    throw LatticeError(ErrorCode::GroupMismatch, "needs a cyclic group of prime order");
  const long p = n.group().n;
  N0N1 out;
  const std::size_t r = n.rank();
  out.n0 = fixed_sublattice(n, whole_group(n.group()));
  if (out.n0.rows() == 0) out.n0 = IntMatrix(0, r);
  IntMatrix phi(r, r), pw = IntMatrix::identity(r);
  for (long k = 0; k < p; ++k) {
    phi = phi + pw;
    pw = pw * n.sigma();
  }
  out.n1 = r ? kernel_basis(phi.transpose()) : IntMatrix(0, 0);
  if (out.n1.rows() == 0) out.n1 = IntMatrix(0, r);
  return out;
}

IdealModule ideal_module(const GLattice& n) {
  N0N1 nn = n0_and_n1(n);
  const long p = n.group().n;
  const std::size_t d = deg_of(p);
  IdealModule im;
  im.quotient = quotient_lattice(n, nn.n0);
  const std::size_t k = im.quotient.rank();
  im.torsion.p = p;
  im.torsion.zeta = im.quotient.sigma();
  if (k % d != 0) throw LatticeError(ErrorCode::NotExact, "N/N_0 rank is not a multiple of p-1");
  im.t = k / d;
  im.free_generators = IntMatrix(0, k);
  im.free_sub = IntMatrix(0, k);
  im.torsion.relations = IntMatrix(0, 0);
  if (k == 0) return im;
  const IntMatrix& s = im.quotient.sigma();
  std::vector<std::vector<Int>> gens, orbit_rows;
  for (std::size_t j = 0; j < k && gens.size() < im.t; ++j) {
    std::vector<Int> v(k, 0);
    v[j] = 1;
    std::vector<std::vector<Int>> trial = orbit_rows;
    std::vector<Int> w = v;
    for (std::size_t a = 0; a < d; ++a) {
      trial.push_back(w);
      w = s.apply(w);
    }
    if (rank(IntMatrix::from_rows(trial)) == trial.size()) {
      orbit_rows = std::move(trial);
      gens.push_back(v);
    }
  }
  im.free_generators = IntMatrix::from_rows(gens, k);
  im.free_sub = IntMatrix::from_rows(orbit_rows, k);
  im.torsion.relations = im.free_sub;
  return im;
}

SteinitzClassRep steinitz_class(const GLattice& n, const PrincipalityOptions& opt) {
  const long p = n.group().n;
  IdealHNF ord = order_ideal_of(n);
  SteinitzClassRep rep;
  rep.ideal = integral_inverse(ord);
  Principality pr = principality(ord, opt);
  if (pr.found) {
    Cyc gen = cyc_one(p);
    for (long a = 2; a < p; ++a) gen = cyc_mul(p, gen, cyc_galois(p, pr.generator, a));
    if (ord.norm() == 1) gen = cyc_one(p);
    if (principal_ideal(p, gen) == rep.ideal) {
      rep.known_trivial = true;
      rep.generator = gen;
    }
  }
  return rep;
}

std::string to_string(Tri t) {
  switch (t) {
    case Tri::True: return "true";
    case Tri::False: return "false";
    case Tri::Unknown: return "unknown";
  }
  return "?";
}

Tri class_multiplicativity_check(const ExtensionSpec& ext, const PrincipalityOptions& opt) {
  if (!ext.verify()) throw LatticeError(ErrorCode::NotExact, "extension is not exact");
  // class of ord(x) is cl(x)^{-1}; need [ord_t] [ord_s]^{-1} [ord_q]^{-1} trivial
  struct Part {
    IdealHNF ord;
    bool inverse;
  };
  std::vector<Part> open;
  for (auto [lat, inv] : {std::pair{&ext.total, false}, std::pair{&ext.sub, true},
                          std::pair{&ext.quotient, true}}) {
    IdealHNF o = order_ideal_of(*lat);
    if (!principality(o, opt)) open.push_back({o, inv});
  }
  if (open.empty()) return Tri::True;
  if (open.size() == 1) return Tri::Unknown;
  IdealHNF k = unit_ideal(ext.total.group().n);
  for (const auto& part : open)
    k = ideal_product(k, part.inverse ? integral_inverse(part.ord) : part.ord);
  return principality(k, opt) ? Tri::True : Tri::Unknown;
}

// ---- class numbers ----

ClassTable ClassTable::defaults() {
  ClassTable t;
  const std::string src_h =
      "external: class numbers of Q(zeta_p) from standard cyclotomic tables "
      "(Washington, Introduction to Cyclotomic Fields, table of h^-)";
  const std::string src_plus = "h_p^+ = 1 for p <= 67 (stated as known; not recomputed)";
  const std::vector<std::pair<long, long>> big{{23, 3},     {29, 8},     {31, 9},
                                               {37, 37},    {41, 121},   {43, 211},
                                               {47, 695},   {53, 4889},  {59, 41241},
                                               {61, 76301}, {67, 853513}};
  for (long p : {3L, 5L, 7L, 11L, 13L, 17L, 19L}) t.set({p, 1L, 1, src_h + "; " + src_plus});
  for (auto [p, h] : big) t.set({p, h, 1, src_h + "; " + src_plus});
  return t;
}

const ClassEntry* ClassTable::find(long p) const {
  auto it = entries_.find(p);
  return it == entries_.end() ? nullptr : &it->second;
}

std::optional<long> ClassTable::h(long p) const {
  const ClassEntry* e = find(p);
  return e ? e->h : std::nullopt;
}

std::optional<long> ClassTable::h_plus(long p) const {
  const ClassEntry* e = find(p);
  if (!e) return std::nullopt;
  return e->h_plus;
}

double minkowski_bound(long p) {
  const double n = static_cast<double>(p - 1);
  const double r2 = n / 2;
  double lg = r2 * std::log(4.0 / std::numbers::pi) + std::lgamma(n + 1) - n * std::log(n) +
              0.5 * static_cast<double>(p - 2) * std::log(static_cast<double>(p));
  return std::exp(lg);
}

Tri minkowski_class_number_one(long p, const PrincipalityOptions& opt) {
  check_prime_p(p);
  const double bound = minkowski_bound(p);
  bool all = true;
  for (long ell = 2; static_cast<double>(ell) <= bound; ++ell) {
    bool prime = true;
    for (long q = 2; q * q <= ell; ++q)
      if (ell % q == 0) prime = false;
    if (!prime) continue;
    long f = ell == p ? 1 : mult_order(ell % p, p);
    if (std::pow(static_cast<double>(ell), static_cast<double>(f)) > bound) continue;
    for (const auto& [ideal, ff] : primes_above(p, Int(ell)))
      if (!principality(ideal, opt)) all = false;
  }
  return all ? Tri::True : Tri::Unknown;
}

}  // namespace latrat
