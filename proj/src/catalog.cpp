#include "latrat/catalog.hpp"
#include "latrat/steinitz.hpp"

#include <array>

namespace latrat {

namespace {

constexpr std::array<std::pair<CatalogName, const char*>, 18> kNames{{
    {CatalogName::Z, "Z"},
    {CatalogName::Zminus, "Zminus"},
    {CatalogName::ZH, "ZH"},
    {CatalogName::ZGmodTau, "ZGmodTau"},
    {CatalogName::ZG, "ZG"},
    {CatalogName::Mplus, "Mplus"},
    {CatalogName::Mminus, "Mminus"},
    {CatalogName::Nplus, "Nplus"},
    {CatalogName::Nminus, "Nminus"},
    {CatalogName::MplusTilde, "MplusTilde"},
    {CatalogName::MminusTilde, "MminusTilde"},
    {CatalogName::R, "R"},
    {CatalogName::P, "P"},
    {CatalogName::V, "V"},
    {CatalogName::X, "X"},
    {CatalogName::Y0, "Y0"},
    {CatalogName::Y1, "Y1"},
    {CatalogName::Y2, "Y2"},
}};

long mod(long a, long n) { return ((a % n) + n) % n; }

void check_odd(long n) {
  if (n < 3 || n % 2 == 0)
    throw LatticeError(ErrorCode::InvalidArgument,
                       "n must be odd and at least 3, got " + std::to_string(n));
}

const SubgroupClass& reflection_subgroup(const std::vector<SubgroupClass>& cls) {
  return find_subgroup(cls, "D_1");
}

// N_+ / N_- on the basis sigma^i u, 1 <= i <= n-1.
GLattice n_lattice(long n, int sign) {
  const std::size_t r = static_cast<std::size_t>(n - 1);
  IntMatrix a(r, r), b(r, r);
  for (std::size_t j = 0; j + 1 < r; ++j) a(j + 1, j) = 1;
  for (std::size_t i = 0; i < r; ++i) a(i, r - 1) = -1;
  for (std::size_t j = 0; j < r; ++j) b(r - 1 - j, j) = sign;
  return GLattice(GroupSpec::dihedral(n), a, b, sign > 0 ? "N_+" : "N_-");
}

// M~_+ (sign +1) and M~_- (sign -1).
GLattice tilde_lattice(long n, int sign) {
  const std::size_t r = static_cast<std::size_t>(n);
  GLattice m = induce(GroupSpec::dihedral(n), sign);
  IntMatrix a(r + 1, r + 1), b(r + 1, r + 1);
  a.set_block(0, 0, m.sigma());
  a(r, r) = 1;
  b.set_block(0, 0, m.tau());
  for (std::size_t i = 0; i < r; ++i) b(i, r) = sign;
  b(r, r) = -sign;
  return GLattice(GroupSpec::dihedral(n), a, b, sign > 0 ? "M~_+" : "M~_-");
}

std::vector<Int> zeros(std::size_t k) { return std::vector<Int>(k, 0); }

std::vector<Int> act(const GLattice& m, GroupElement e, const std::vector<Int>& v) {
  return m.rho(e).apply(v);
}

IntMatrix columns(const std::vector<std::vector<Int>>& cols) {
  return IntMatrix::from_rows(cols).transpose();
}

Witness witness_t34(long n) {
  GroupSpec g = GroupSpec::dihedral(n);
  auto cls = subgroup_classes(g);
  GLattice zh = perm_lattice(g, find_subgroup(cls, "C_" + std::to_string(n)));
  GLattice zgt = perm_lattice(g, reflection_subgroup(cls));
  GLattice rhs = direct_sum(zh, zgt);
  // u0 u1 v0 .. v_{n-1}
  const std::size_t r = static_cast<std::size_t>(n + 2);
  auto u = [](long i) { return static_cast<std::size_t>(i); };
  auto v = [](long i) { return static_cast<std::size_t>(2 + i); };
  std::vector<Int> x = zeros(r), y = zeros(r), t = zeros(r);
  x[u(0)] = 1, x[u(1)] = 1;
  for (long i = 1; i < n; ++i) x[v(i)] = 1;
  y[u(0)] = (n - 1) / 2, y[u(1)] = (n + 1) / 2;
  for (long i = 0; i < n; ++i) y[v(i)] = (n - 1) / 2;
  t[u(0)] = 1, t[u(1)] = 1;
  for (long i = 0; i < n; ++i) t[v(i)] = 1;
  std::vector<std::vector<Int>> cols;
  for (long i = 1; i <= n; ++i) cols.push_back(act(rhs, sigma_element(i), x));
  cols.push_back(y);
  cols.push_back(t);

  std::vector<std::size_t> order;
  for (long i = 1; i < n; ++i) order.push_back(static_cast<std::size_t>(i));
  order.push_back(0);
  order.push_back(static_cast<std::size_t>(n));
  order.push_back(static_cast<std::size_t>(n + 1));
  GLattice lhs = permute_basis(direct_sum(tilde_lattice(n, 1), trivial_lattice(g)), order);
  IntMatrix c = columns(cols);
  return {WitnessId::T34, n, lhs, rhs, c, c};
}

Witness witness_t35(long n) {
  GroupSpec g = GroupSpec::dihedral(n);
  auto cls = subgroup_classes(g);
  GLattice rhs = direct_sum(regular_lattice(g), trivial_lattice(g));
  const std::size_t r = static_cast<std::size_t>(2 * n + 1);
  auto u = [n](long i) { return static_cast<std::size_t>(mod(i, n)); };
  auto v = [n](long i) { return static_cast<std::size_t>(n + mod(i, n)); };
  const std::size_t t = r - 1;
  std::vector<Int> x = zeros(r), y = zeros(r), z = zeros(r);
  x[u(0)] = 1, x[v(0)] = -1;
  for (long i = 0; i < n; ++i) y[u(i)] = 1;
  y[t] = 1;
  for (long i = 1; i <= (n - 1) / 2; ++i) z[u(i)] = 1;
  for (long j = (n + 1) / 2; j < n; ++j) z[v(j)] = 1;
  z[t] = 1;
  std::vector<std::vector<Int>> cols;
  for (long i = 1; i <= n; ++i) cols.push_back(act(rhs, sigma_element(i), x));
  cols.push_back(y);
  for (long i = 1; i <= n; ++i) cols.push_back(act(rhs, sigma_element(i), z));

  // w_1..w_{n-1}, w_0, w', e_1..e_{n-1}, e_0
  std::vector<std::size_t> order;
  for (long i = 1; i < n; ++i) order.push_back(static_cast<std::size_t>(i));
  order.push_back(0);
  order.push_back(static_cast<std::size_t>(n));
  for (long i = 1; i < n; ++i) order.push_back(static_cast<std::size_t>(n + 1 + i));
  order.push_back(static_cast<std::size_t>(n + 1));
  GLattice lhs = permute_basis(
      direct_sum(tilde_lattice(n, -1), perm_lattice(g, reflection_subgroup(cls))), order);
  IntMatrix c = columns(cols);
  return {WitnessId::T35, n, lhs, rhs, c, c};
}

Witness witness_t37(long n) {
  GroupSpec g = GroupSpec::dihedral(n);
  auto cls = subgroup_classes(g);
  GLattice rhs =
      direct_sum(regular_lattice(g), perm_lattice(g, find_subgroup(cls, "C_" + std::to_string(n))));
  const std::size_t r = static_cast<std::size_t>(2 * n + 2);
  auto u = [n](long i) { return static_cast<std::size_t>(mod(i, n)); };
  auto v = [n](long i) { return static_cast<std::size_t>(n + mod(i, n)); };
  const std::size_t t0 = r - 2, t1 = r - 1;
  const long h = (n - 1) / 2;
  std::vector<Int> x = zeros(r), y0 = zeros(r), z = zeros(r), y1 = zeros(r);
  x[u(0)] += 1;
  for (long i = (n + 3) / 2; i <= n - 1; ++i) x[u(i)] += 1;
  for (long j = 2; j <= (n + 1) / 2; ++j) x[v(j)] += 1;
  x[t0] += 1, x[t1] += 1;
  for (long j = 0; j < n; ++j) y0[v(j)] = h;
  y0[t0] = 1, y0[t1] = n - 1;
  z[u(0)] += 1, z[u(1)] += 1;
  for (long i = (n + 3) / 2; i <= n - 1; ++i) z[u(i)] += 1;
  for (long j = 1; j <= (n + 1) / 2; ++j) z[v(j)] -= 1;
  z[t0] += 1, z[t1] -= 1;
  for (long i = 0; i < n; ++i) y1[u(i)] = 1;
  for (long j = 0; j < n; ++j) y1[v(j)] = -h;
  y1[t0] = 1, y1[t1] = -(n - 1);

  std::vector<std::vector<Int>> cols;
  for (long k = 0; k < n; ++k) cols.push_back(act(rhs, sigma_element(mod((n - 3) / 2 + k, n)), x));
  cols.push_back(y0);
  for (long k = 0; k < n; ++k) cols.push_back(act(rhs, sigma_element(mod((n - 3) / 2 + k, n)), z));
  cols.push_back(y1);

  // x and z play the role of w_1 in their blocks.
  std::vector<std::size_t> order;
  for (long k = 0; k < n; ++k) order.push_back(static_cast<std::size_t>(mod(h + k, n)));
  order.push_back(static_cast<std::size_t>(n));
  for (long k = 0; k < n; ++k) order.push_back(static_cast<std::size_t>(n + 1 + mod(h + k, n)));
  order.push_back(static_cast<std::size_t>(2 * n + 1));
  GLattice lhs =
      permute_basis(direct_sum(tilde_lattice(n, 1), tilde_lattice(n, -1)), order);
  IntMatrix c = columns(cols);
  return {WitnessId::T37, n, lhs, rhs, c, c};
}

Witness witness_l46(long n) {
  GroupSpec g = GroupSpec::dihedral(n);
  GLattice zg = regular_lattice(g);
  const std::size_t r = static_cast<std::size_t>(2 * n);
  const long h = (n - 1) / 2;
  // u_i, v_i in Z[G] coordinates (sigma^i at i, sigma^i tau at n+i).
  auto u_vec = [&](long i) {
    std::vector<Int> e = zeros(r);
    e[static_cast<std::size_t>(mod(h + i, n))] += 1;
    e[static_cast<std::size_t>(mod(h + 1 + i, n))] -= 1;
    return e;
  };
  auto v_vec = [&](long i) {
    std::vector<Int> e = zeros(r);
    e[static_cast<std::size_t>(n + mod(h + 1 + i, n))] += 1;
    e[static_cast<std::size_t>(n + mod(h + i, n))] -= 1;
    return e;
  };
  std::vector<std::vector<Int>> basis;
  for (long i = 1; i < n; ++i) basis.push_back(u_vec(i));
  for (long i = 1; i < n; ++i) basis.push_back(v_vec(i));
  GLattice rhs = sublattice_action(zg, IntMatrix::from_rows(basis));
  rhs.set_name("ker(Z[G]->Z[H])");

  // Coordinates in (u_1..u_{n-1}, v_1..v_{n-1}); u_0 = -sum u_i, v_0 = -sum v_i.
  const std::size_t k = static_cast<std::size_t>(2 * n - 2);
  auto coord_u = [&](std::vector<Int>& c, long i, long s) {
    i = mod(i, n);
    if (i == 0)
      for (long j = 1; j < n; ++j) c[static_cast<std::size_t>(j - 1)] -= s;
    else
      c[static_cast<std::size_t>(i - 1)] += s;
  };
  auto coord_v = [&](std::vector<Int>& c, long i, long s) {
    i = mod(i, n);
    if (i == 0)
      for (long j = 1; j < n; ++j) c[static_cast<std::size_t>(n - 2 + j)] -= s;
    else
      c[static_cast<std::size_t>(n - 2 + i)] += s;
  };
  std::vector<std::vector<Int>> prow;
  for (long i = 1; i < n; ++i) {
    std::vector<Int> c = zeros(k);
    coord_u(c, i, 1);
    coord_v(c, i, 1);
    prow.push_back(c);
  }
  for (long i = 1; i < n; ++i) {
    std::vector<Int> c = zeros(k);
    coord_u(c, i - 1, 1);
    coord_v(c, i + 1, -1);
    prow.push_back(c);
  }
  IntMatrix p = IntMatrix::from_rows(prow);
  GLattice lhs = direct_sum(n_lattice(n, 1), n_lattice(n, -1));
  return {WitnessId::L46, n, lhs, rhs, p, p.transpose()};
}

}  // namespace

std::string to_string(CatalogName name) {
  for (const auto& [k, s] : kNames)
    if (k == name) return s;
  return "?";
}

std::optional<CatalogName> catalog_name_from_string(const std::string& s) {
  for (const auto& [k, t] : kNames)
    if (s == t) return k;
  return std::nullopt;
}

std::vector<CatalogName> all_catalog_names() {
  std::vector<CatalogName> out;
  for (const auto& [k, s] : kNames) out.push_back(k);
  return out;
}

bool is_lee_name(CatalogName name) {
  switch (name) {
    case CatalogName::R:
    case CatalogName::P:
    case CatalogName::V:
    case CatalogName::X:
    case CatalogName::Y0:
    case CatalogName::Y1:
    case CatalogName::Y2:
      return true;
    default:
      return false;
  }
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

GLattice build(CatalogName name, long n) {
  check_odd(n);
  if (is_lee_name(name) && !is_prime(n))
    throw LatticeError(ErrorCode::InvalidArgument,
                       to_string(name) + " needs a prime, got " + std::to_string(n));
  GroupSpec g = GroupSpec::dihedral(n);
  auto named = [&](GLattice m) { return m.set_name(to_string(name)); };
  switch (name) {
    case CatalogName::Z:
      return trivial_lattice(g);
    case CatalogName::Zminus:
      return sign_lattice(g);
    case CatalogName::ZH:
      return perm_lattice(g, find_subgroup(subgroup_classes(g), "C_" + std::to_string(n)));
    case CatalogName::ZGmodTau:
      return perm_lattice(g, reflection_subgroup(subgroup_classes(g)));
    case CatalogName::ZG:
      return regular_lattice(g);
    case CatalogName::Mplus:
      return induce(g, 1);
    case CatalogName::Mminus:
      return induce(g, -1);
    case CatalogName::Nplus:
      return n_lattice(n, 1);
    case CatalogName::Nminus:
      return n_lattice(n, -1);
    case CatalogName::MplusTilde:
      return tilde_lattice(n, 1);
    case CatalogName::MminusTilde:
      return tilde_lattice(n, -1);
    case CatalogName::R:
      return named(n_lattice(n, 1));
    case CatalogName::P:
      return named(n_lattice(n, -1));
    case CatalogName::V:
      return named(induce(g, 1));
    case CatalogName::X:
      return named(induce(g, -1));
    case CatalogName::Y0:
      return named(tilde_lattice(n, -1));
    case CatalogName::Y1:
      return named(tilde_lattice(n, 1));
    case CatalogName::Y2:
      return named(regular_lattice(g));
  }
  throw LatticeError(ErrorCode::InvalidArgument, "unknown catalog name");
}

IntMatrix circulant(const std::vector<Int>& c) {
  const std::size_t n = c.size();
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = c[(i + n - j) % n];
  return m;
}

IntMatrix circulant(const std::vector<long>& c) {
  return circulant(std::vector<Int>(c.begin(), c.end()));
}

std::vector<long> circulant_pattern_half(long n) {
  std::vector<long> c(static_cast<std::size_t>(n), 0);
  for (long i = 0; i < (n - 1) / 2; ++i) c[static_cast<std::size_t>(i)] = 1;
  return c;
}

std::vector<long> circulant_pattern_unit(long n) {
  std::vector<long> c;
  for (long i = 0; i < (n - 1) / 2; ++i) c.push_back(-1);
  c.push_back(0);
  for (long i = 0; i < (n - 3) / 2; ++i) c.push_back(1);
  c.push_back(0);
  return c;
}

std::string to_string(WitnessId id) {
  switch (id) {
    case WitnessId::T34: return "T34";
    case WitnessId::T35: return "T35";
    case WitnessId::T37: return "T37";
    case WitnessId::L46: return "L46";
  }
  return "?";
}

std::optional<WitnessId> witness_id_from_string(const std::string& s) {
  for (WitnessId id : {WitnessId::T34, WitnessId::T35, WitnessId::T37, WitnessId::L46})
    if (to_string(id) == s) return id;
  return std::nullopt;
}

Witness witness(WitnessId id, long n) {
  check_odd(n);
  switch (id) {
    case WitnessId::T34: return witness_t34(n);
    case WitnessId::T35: return witness_t35(n);
    case WitnessId::T37: return witness_t37(n);
    case WitnessId::L46: return witness_l46(n);
  }
  throw LatticeError(ErrorCode::InvalidArgument, "unknown witness");
}

WitnessCheck verify_witness(const Witness& w) {
  const IntMatrix& c = w.intertwiner;
  if (!(w.lhs.group() == w.rhs.group()))
    return {false, "lhs and rhs are over different groups"};
  if (!c.is_square() || c.rows() != w.rhs.rank() || c.cols() != w.lhs.rank())
    return {false, "shape " + std::to_string(c.rows()) + "x" + std::to_string(c.cols()) +
                       " does not match ranks " + std::to_string(w.rhs.rank()) + "/" +
                       std::to_string(w.lhs.rank())};
  if (!is_unimodular(c))
    return {false, "not unimodular: det = " + det(c).get_str()};
  if (!(w.rhs.sigma() * c == c * w.lhs.sigma()))
    return {false, "sigma relation fails: rho_rhs(sigma) C != C rho_lhs(sigma)"};
  if (w.lhs.group().is_dihedral() && !(w.rhs.tau() * c == c * w.lhs.tau()))
    return {false, "tau relation fails: rho_rhs(tau) C != C rho_lhs(tau)"};
  return {true, "ok"};
}

GLattice twisted_lattice(CatalogName base, const IdealHNF& a) {
  if (!a.real_subfield)
    throw LatticeError(ErrorCode::InvalidArgument, "twist needs an ideal of the real subfield");
  const IdealHNF checked = make_ideal(a.p, a.basis, true);
  const long p = checked.p;
  const IdealHNF full = extend_to_full(checked);
  auto rename = [&](GLattice m) {
    return m.set_name(to_string(base) + "_A");
  };
  switch (base) {
    case CatalogName::R:
      return rename(ideal_lattice_dihedral(full));
    case CatalogName::P: {
      GLattice m = ideal_lattice_dihedral(full);
      return rename(GLattice(m.group(), m.sigma(), -m.tau()));
    }
    case CatalogName::V:
    case CatalogName::X:
    case CatalogName::Y0:
    case CatalogName::Y1:
      break;
    default:
      throw LatticeError(ErrorCode::InvalidArgument,
                         "no twist defined for " + to_string(base));
  }
  // a L + psi^{-1}((1 - zeta) A), psi(e_i) = zeta^i on the augmentation
  // kernel of the first p coordinates
  if (checked.norm() % p == 0)
    throw LatticeError(ErrorCode::InvalidArgument, "twist of " + to_string(base) + " needs an ideal prime to p");
  GLattice l = build(base, p);
  const std::size_t r = l.rank();
  const Int q = rational_part(full);
  Cyc one_minus(static_cast<std::size_t>(p - 1), 0);
  one_minus[0] = 1;
  one_minus[1] = -1;
  const IdealHNF ja = ideal_product(principal_ideal(p, one_minus), full);
  IntMatrix rows(0, r);
  for (std::size_t i = 0; i < ja.basis.rows(); ++i) {
    std::vector<Int> x(r, 0);
    Int sum = 0;
    for (std::size_t j = 0; j < ja.basis.cols(); ++j) {
      x[j] = ja.basis(i, j);
      sum += x[j];
    }
    if (sum % p != 0) throw LatticeError(ErrorCode::InvalidArgument, "bad ideal product");
    Int t = -sum / p;
    for (long j = 0; j < p; ++j) x[static_cast<std::size_t>(j)] += t;
    rows = vstack(rows, IntMatrix::from_rows({x}));
  }
  IntMatrix scaled = IntMatrix::identity(r);
  for (std::size_t i = 0; i < r; ++i) scaled(i, i) = q;
  IntMatrix basis = row_lattice_basis(vstack(rows, scaled));
  if (!is_stable(l, basis))
    throw LatticeError(ErrorCode::NotStable, "twisted sublattice is not G-stable");
  return rename(sublattice_action(l, basis));
}

std::vector<std::pair<CatalogName, GLattice>> lee_census(long p) {
  return lee_census(p, ClassTable::defaults());
}

std::vector<std::pair<CatalogName, GLattice>> lee_census(long p, const ClassTable& table) {
  if (!is_prime(p) || p == 2)
    throw LatticeError(ErrorCode::InvalidArgument, "census needs an odd prime");
  auto hp = table.h_plus(p);
  if (!hp)
    throw LatticeError(ErrorCode::InvalidArgument,
                       "p = " + std::to_string(p) + " is outside the class number table");
  if (*hp != 1)
    throw LatticeError(ErrorCode::InvalidArgument, "census needs h_p^+ = 1");
  std::vector<std::pair<CatalogName, GLattice>> out;
  for (CatalogName c : {CatalogName::Z, CatalogName::Zminus, CatalogName::ZH, CatalogName::R,
                        CatalogName::P, CatalogName::V, CatalogName::X, CatalogName::Y0,
                        CatalogName::Y1, CatalogName::Y2})
    out.emplace_back(c, build(c, p));
  return out;
}

}  // namespace latrat
