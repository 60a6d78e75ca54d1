#include "latrat/rationality.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <set>

#include "latrat/catalog.hpp"

namespace latrat {

namespace {

using i64 = long long;
using u64 = std::uint64_t;
constexpr u64 kMod = (1ULL << 61) - 1;

u64 mod_mul(u64 a, u64 b) {
  unsigned __int128 z = static_cast<unsigned __int128>(a) * b;
  u64 lo = static_cast<u64>(z & kMod);
  u64 hi = static_cast<u64>(z >> 61);
  u64 s = lo + hi;
  return s >= kMod ? s - kMod : s;
}

u64 mod_pow(u64 a, u64 e) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mod_mul(r, a);
    a = mod_mul(a, a);
    e >>= 1;
  }
  return r;
}

u64 to_mod(i64 x) {
  i64 r = x % static_cast<i64>(kMod);
  return static_cast<u64>(r < 0 ? r + static_cast<i64>(kMod) : r);
}

// incremental row echelon form mod 2^61 - 1
class ModEchelon {
 public:
  explicit ModEchelon(std::size_t n) : n_(n) {}
  bool add(const std::vector<i64>& v) {
    std::vector<u64> w(n_);
    for (std::size_t i = 0; i < n_; ++i) w[i] = to_mod(v[i]);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      u64 c = w[pivots_[r]];
      if (!c) continue;
      u64 f = kMod - c;
      for (std::size_t i = pivots_[r]; i < n_; ++i)
        if (rows_[r][i]) w[i] = (w[i] + mod_mul(f, rows_[r][i])) % kMod;
    }
    std::size_t piv = 0;
    while (piv < n_ && !w[piv]) ++piv;
    if (piv == n_) return false;
    u64 inv = mod_pow(w[piv], kMod - 2);
    for (std::size_t i = piv; i < n_; ++i) w[i] = mod_mul(w[i], inv);
    rows_.push_back(std::move(w));
    pivots_.push_back(piv);
    return true;
  }
  std::size_t rank() const { return rows_.size(); }

 private:
  std::size_t n_;
  std::vector<std::vector<u64>> rows_;
  std::vector<std::size_t> pivots_;
};

std::vector<std::vector<i64>> small_matrix(const IntMatrix& m, bool* ok) {
  std::vector<std::vector<i64>> out(m.rows(), std::vector<i64>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Int& x = m(i, j);
      if (!x.fits_slong_p() || abs(x) > 1000000) *ok = false;
      out[i][j] = x.get_si();
    }
  return out;
}

Int trace(const IntMatrix& m) {
  Int t = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

long double det_approx(std::vector<long double> a, std::size_t n) {
  long double d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::fabs(a[r * n + c]) > std::fabs(a[piv * n + c])) piv = r;
    if (a[piv * n + c] == 0) return 0;
    if (piv != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a[c * n + k], a[piv * n + k]);
      d = -d;
    }
    long double pv = a[c * n + c];
    d *= pv;
    for (std::size_t r = c + 1; r < n; ++r) {
      long double f = a[r * n + c] / pv;
      if (f == 0) continue;
      for (std::size_t k = c; k < n; ++k) a[r * n + k] -= f * a[c * n + k];
    }
  }
  return d;
}

IntMatrix combine(const std::vector<IntMatrix>& basis, const std::vector<long>& c) {
  IntMatrix out(basis[0].rows(), basis[0].cols());
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (c[i]) out = out + basis[i].scaled(c[i]);
  return out;
}

bool verified_iso(const GLattice& a, const GLattice& b, const IntMatrix& c) {
  if (c.rows() != b.rank() || c.cols() != a.rank()) return false;
  LatticeMap m{a, b, c};
  return is_unimodular(c) && m.is_equivariant();
}

std::vector<std::size_t> class_indices(const GroupSpec& g,
                                       const std::vector<SubgroupClass>& cls) {
  std::vector<std::size_t> idx;
  for (const auto& s : cls) idx.push_back(static_cast<std::size_t>(g.order()) / s.size());
  return idx;
}

// all multiplicity vectors with sum mult[i] * idx[i] == total
void enumerate_sums(const std::vector<std::size_t>& idx, std::size_t total,
                    std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> cur(idx.size(), 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t left) {
    if (i == idx.size()) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (std::size_t k = 0; k * idx[i] <= left; ++k) {
      cur[i] = k;
      rec(i + 1, left - k * idx[i]);
    }
    cur[i] = 0;
  };
  rec(0, total);
}

bool odd_prime(long n) { return n >= 3 && is_prime(n); }

}  // namespace

// ---- fingerprints ----

std::string Fingerprint::difference(const Fingerprint& o) const {
  if (rank != o.rank) return "rank: " + std::to_string(rank) + " vs " + std::to_string(o.rank);
  for (std::size_t i = 0; i < rows.size() && i < o.rows.size(); ++i) {
    const auto& x = rows[i];
    const auto& y = o.rows[i];
    const std::string at = " at " + x.subgroup + ": ";
    if (x.fixed_rank != y.fixed_rank)
      return "fixed_rank" + at + std::to_string(x.fixed_rank) + " vs " +
             std::to_string(y.fixed_rank);
    if (!(x.hminus1 == y.hminus1))
      return "hminus1" + at + x.hminus1.to_string() + " vs " + y.hminus1.to_string();
    if (!(x.h0 == y.h0)) return "h0" + at + x.h0.to_string() + " vs " + y.h0.to_string();
    if (!(x.h1 == y.h1)) return "h1" + at + x.h1.to_string() + " vs " + y.h1.to_string();
  }
  if (rows.size() != o.rows.size()) return "subgroup classes differ";
  return {};
}

Fingerprint fingerprint(const GLattice& m) {
  Fingerprint f;
  f.rank = m.rank();
  for (const auto& s : subgroup_classes(m.group())) {
    FingerprintRow r;
    r.subgroup = s.label;
    if (m.rank() > 0) {
      r.fixed_rank = fixed_sublattice(m, s).rows();
      r.hminus1 = tate_hminus1(m, s);
      r.h0 = tate_h0(m, s);
      r.h1 = h1(m, s);
    }
    f.rows.push_back(std::move(r));
  }
  return f;
}

Fingerprint operator+(const Fingerprint& a, const Fingerprint& b) {
  if (a.rows.size() != b.rows.size())
    throw LatticeError(ErrorCode::GroupMismatch, "fingerprints over different groups");
  Fingerprint f;
  f.rank = a.rank + b.rank;
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    FingerprintRow r;
    r.subgroup = a.rows[i].subgroup;
    r.fixed_rank = a.rows[i].fixed_rank + b.rows[i].fixed_rank;
    r.hminus1 = direct_sum(a.rows[i].hminus1, b.rows[i].hminus1);
    r.h0 = direct_sum(a.rows[i].h0, b.rows[i].h0);
    r.h1 = direct_sum(a.rows[i].h1, b.rows[i].h1);
    f.rows.push_back(std::move(r));
  }
  return f;
}

// ---- isomorphism ----

std::string to_string(IsoOutcome o) {
  switch (o) {
    case IsoOutcome::Iso:
      return "Iso";
    case IsoOutcome::NonIso:
      return "NonIso";
    case IsoOutcome::Unknown:
      return "Unknown";
  }
  return "?";
}

std::vector<IntMatrix> equivariant_hom_basis(const GLattice& a, const GLattice& b) {
  if (!(a.group() == b.group()))
    throw LatticeError(ErrorCode::GroupMismatch, "hom between different groups");
  const std::size_t ra = a.rank(), rb = b.rank();
  if (ra == 0 || rb == 0) return {};
  const auto els = elements(a.group());
  // dim Hom_G = average of chi_a(g^{-1}) chi_b(g)
  Int total = 0;
  std::vector<IntMatrix> ma, mb_inv;
  for (const auto& g : els) {
    IntMatrix pa = a.rho(g), pb = b.rho(g);
    total += trace(a.rho(inverse(a.group(), g))) * trace(pb);
    ma.push_back(a.rho(inverse(a.group(), g)));
    mb_inv.push_back(pb);
  }
  const Int dim_int = total / static_cast<long>(els.size());
  const std::size_t dim = dim_int.get_ui();
  if (dim == 0) return {};
  const std::size_t n = ra * rb;

  bool small = true;
  std::vector<std::vector<std::vector<i64>>> sa, sb;
  for (std::size_t k = 0; k < els.size(); ++k) {
    sa.push_back(small_matrix(ma[k], &small));
    sb.push_back(small_matrix(mb_inv[k], &small));
  }
  IntMatrix rows(0, n);
  if (small) {
    // average of rho_b(g) E_ij rho_a(g^{-1}) over g, for E_ij until the rank is reached
    ModEchelon ech(n);
    std::vector<std::vector<Int>> picked;
    for (std::size_t i = 0; i < rb && ech.rank() < dim; ++i)
      for (std::size_t j = 0; j < ra && ech.rank() < dim; ++j) {
        std::vector<i64> v(n, 0);
        for (std::size_t k = 0; k < els.size(); ++k) {
          const auto& pb = sb[k];
          const auto& pa = sa[k];
          for (std::size_t r = 0; r < rb; ++r) {
            i64 x = pb[r][i];
            if (!x) continue;
            for (std::size_t c = 0; c < ra; ++c) {
              i64 y = pa[j][c];
              if (y) v[r * ra + c] += x * y;
            }
          }
        }
        if (ech.add(v)) {
          std::vector<Int> w;
          for (i64 x : v) w.emplace_back(static_cast<long>(x));
          picked.push_back(std::move(w));
        }
      }
    rows = IntMatrix::from_rows(picked, n);
  } else {
    IntMatrix k = fixed_sublattice(hom_lattice(a, b), whole_group(a.group()));
    rows = k;
  }
  IntMatrix sat = saturate(rows);
  std::vector<IntMatrix> out;
  for (std::size_t r = 0; r < sat.rows(); ++r) {
    IntMatrix h(rb, ra);
    for (std::size_t i = 0; i < rb; ++i)
      for (std::size_t j = 0; j < ra; ++j) h(i, j) = sat(r, i * ra + j);
    out.push_back(std::move(h));
  }
  return out;
}

IsoResult iso(const GLattice& a, const GLattice& b, const SearchBudget& budget,
              const std::vector<IntMatrix>& hints) {
  if (!(a.group() == b.group()))
    throw LatticeError(ErrorCode::GroupMismatch, "iso between different groups");
  IsoResult res;
  if (a.rank() != b.rank()) {
    res.outcome = IsoOutcome::NonIso;
    res.reason = "rank: " + std::to_string(a.rank()) + " vs " + std::to_string(b.rank());
    return res;
  }
  const std::size_t n = a.rank();
  if (n == 0) {
    res.outcome = IsoOutcome::Iso;
    res.map = LatticeMap{a, b, IntMatrix(0, 0)};
    return res;
  }
  for (const auto& h : hints)
    if (verified_iso(a, b, h)) {
      res.outcome = IsoOutcome::Iso;
      res.map = LatticeMap{a, b, h};
      res.reason = "hint";
      return res;
    }
  std::string diff = fingerprint(a).difference(fingerprint(b));
  if (!diff.empty()) {
    res.outcome = IsoOutcome::NonIso;
    res.reason = diff;
    return res;
  }
  if (n * n > budget.max_hom_entries) {
    res.reason = "hom space too large for the budget";
    return res;
  }
  auto hom = equivariant_hom_basis(a, b);
  if (hom.empty()) {
    res.outcome = IsoOutcome::NonIso;
    res.reason = "Hom_G(a, b) = 0";
    return res;
  }
  // shorten the hom basis
  {
    IntMatrix flat(hom.size(), n * n);
    for (std::size_t r = 0; r < hom.size(); ++r)
      for (std::size_t i = 0; i < n * n; ++i) flat(r, i) = hom[r].data()[i];
    auto red = lll_reduce(flat, IntMatrix::identity(n * n));
    for (std::size_t r = 0; r < hom.size(); ++r)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) hom[r](i, j) = red.basis(r, i * n + j);
  }
  const std::size_t k = hom.size();
  std::vector<std::vector<long double>> hd(k, std::vector<long double>(n * n));
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t i = 0; i < n * n; ++i) hd[r][i] = hom[r].data()[i].get_d();

  auto eval = [&](const std::vector<long>& c) {
    std::vector<long double> m(n * n, 0);
    for (std::size_t r = 0; r < k; ++r)
      if (c[r])
        for (std::size_t i = 0; i < n * n; ++i) m[i] += c[r] * hd[r][i];
    ++res.tried;
    return std::fabs(det_approx(std::move(m), n));
  };
  auto accept = [&](const std::vector<long>& c) {
    IntMatrix m = combine(hom, c);
    if (!verified_iso(a, b, m)) return false;
    res.outcome = IsoOutcome::Iso;
    res.map = LatticeMap{a, b, m};
    return true;
  };
  auto unit = [](long double d) { return d > 0.5 && d < 1.5; };

  // sparse box: support size 1, 2, ... with entries in [-R, R]
  const long rad = std::max<long>(1, budget.box_radius);
  std::size_t box_points = 0;
  bool box_done = false;
  std::vector<long> c(k, 0);
  for (std::size_t s = 1; s <= k && !box_done; ++s) {
    std::vector<std::size_t> sup(s);
    for (std::size_t i = 0; i < s; ++i) sup[i] = i;
    while (!box_done) {
      // all nonzero value assignments on this support
      std::vector<long> val(s, -rad);
      while (true) {
        bool zero = false;
        for (auto v : val) zero |= (v == 0);
        if (!zero) {
          std::fill(c.begin(), c.end(), 0);
          for (std::size_t i = 0; i < s; ++i) c[sup[i]] = val[i];
          if (unit(eval(c)) && accept(c)) {
            res.reason = "box";
            return res;
          }
          if (++box_points >= budget.max_box) {
            box_done = true;
            break;
          }
        }
        std::size_t i = 0;
        while (i < s && val[i] == rad) val[i++] = -rad;
        if (i == s) break;
        ++val[i];
      }
      // next support
      std::size_t i = s;
      while (i > 0 && sup[i - 1] == k - s + i - 1) --i;
      if (i == 0) break;
      ++sup[i - 1];
      for (std::size_t j = i; j < s; ++j) sup[j] = sup[j - 1] + 1;
    }
  }

  // randomized descent on |det|
  std::mt19937_64 rng(budget.seed);
  std::uniform_int_distribution<long> coef(-rad, rad);
  std::size_t used = 0;
  const long double inf = std::numeric_limits<long double>::infinity();
  auto score = [&](const std::vector<long>& x) {
    ++used;
    long double d = eval(x);
    return d < 0.5 ? inf : d;
  };
  while (used < budget.random_draws) {
    for (auto& x : c) x = coef(rng);
    long double cur = score(c);
    while (used < budget.random_draws) {
      if (cur < 1.5) {
        if (accept(c)) {
          res.reason = "descent";
          return res;
        }
        break;
      }
      long double best = cur;
      std::size_t bi = k;
      long bd = 0;
      for (std::size_t i = 0; i < k && used < budget.random_draws; ++i)
        for (long d : {-1L, 1L}) {
          c[i] += d;
          long double s = score(c);
          c[i] -= d;
          if (s < best) {
            best = s;
            bi = i;
            bd = d;
          }
        }
      if (bi == k) break;
      c[bi] += bd;
      cur = best;
    }
  }
  res.reason = "search budget exhausted";
  return res;
}

// ---- flabby resolutions ----

namespace {

struct Generator {
  std::size_t cls;
  std::vector<Int> image;  // in dual coordinates
};

// matrix of the equivariant map Z[G/S] -> target sending the base coset to x
IntMatrix coset_map(const GLattice& perm, const GLattice& target, const std::vector<Int>& x) {
  const std::size_t r = perm.rank();
  IntMatrix f(target.rank(), r);
  std::vector<bool> done(r, false);
  for (const auto& g : elements(perm.group())) {
    IntMatrix pg = perm.rho(g);
    std::size_t j = 0;
    while (j < r && pg(j, 0) == 0) ++j;
    if (j == r || done[j]) continue;
    done[j] = true;
    auto y = target.rho(g).apply(x);
    for (std::size_t i = 0; i < target.rank(); ++i) f(i, j) = y[i];
  }
  return f;
}

struct ResolutionBuilder {
  GLattice dual_m;
  std::vector<SubgroupClass> cls;
  std::vector<GLattice> perms;
  std::vector<IntMatrix> targets;  // HNF of fixed parts of the dual

  bool surjective(const std::vector<Generator>& gens) const {
    const std::size_t rm = dual_m.rank();
    for (std::size_t s = 0; s < cls.size(); ++s) {
      IntMatrix img(0, rm);
      for (const auto& g : gens) {
        IntMatrix f = coset_map(perms[g.cls], dual_m, g.image);
        IntMatrix fix = fixed_sublattice(perms[g.cls], cls[s]);
        if (fix.rows()) img = vstack(img, fix * f.transpose());
      }
      IntMatrix h = img.rows() ? row_lattice_basis(img) : IntMatrix(0, rm);
      if (!(h == targets[s])) return false;
    }
    return true;
  }
};

}  // namespace

FlabbyResolution flabby_resolution(const GLattice& m) {
  const GroupSpec& g = m.group();
  FlabbyResolution out;
  out.lattice = m;
  ResolutionBuilder b;
  b.dual_m = m.rank() ? dual(m) : m;
  b.cls = subgroup_classes(g);
  const std::size_t rm = m.rank();
  for (const auto& s : b.cls) {
    b.perms.push_back(perm_lattice(g, s));
    IntMatrix fix = rm ? fixed_sublattice(b.dual_m, s) : IntMatrix(0, 0);
    b.targets.push_back(fix.rows() ? row_lattice_basis(fix) : IntMatrix(0, rm));
  }
  std::vector<Generator> gens;
  if (rm > 0) {
    // largest subgroups first, one fixed basis vector at a time
    for (std::size_t s = b.cls.size(); s-- > 0;) {
      IntMatrix fix = fixed_sublattice(b.dual_m, b.cls[s]);
      for (std::size_t r = 0; r < fix.rows(); ++r) {
        IntMatrix img(0, rm);
        for (const auto& gen : gens) {
          IntMatrix f = coset_map(b.perms[gen.cls], b.dual_m, gen.image);
          IntMatrix fx = fixed_sublattice(b.perms[gen.cls], b.cls[s]);
          if (fx.rows()) img = vstack(img, fx * f.transpose());
        }
        IntMatrix h = img.rows() ? row_lattice_basis(img) : IntMatrix(0, rm);
        if (h == b.targets[s]) break;
        gens.push_back({s, fix.row_vector(r)});
      }
    }
    // drop redundant summands; try both orders and keep the smaller result
    auto prune = [&](std::vector<Generator> cur, bool small_first) {
      std::vector<std::size_t> order(cur.size());
      for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
      std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        auto rx = b.perms[cur[x].cls].rank(), ry = b.perms[cur[y].cls].rank();
        return small_first ? rx < ry : rx > ry;
      });
      std::vector<bool> keep(cur.size(), true);
      for (std::size_t i : order) {
        keep[i] = false;
        std::vector<Generator> trial;
        for (std::size_t j = 0; j < cur.size(); ++j)
          if (keep[j]) trial.push_back(cur[j]);
        if (!b.surjective(trial)) keep[i] = true;
      }
      std::vector<Generator> res;
      for (std::size_t j = 0; j < cur.size(); ++j)
        if (keep[j]) res.push_back(cur[j]);
      return res;
    };
    auto total_rank = [&](const std::vector<Generator>& v) {
      std::size_t t = 0;
      for (const auto& x : v) t += b.perms[x.cls].rank();
      return t;
    };
    auto a1 = prune(gens, true), a2 = prune(gens, false);
    gens = total_rank(a1) <= total_rank(a2) ? a1 : a2;
  }
  // sort summands by class for a stable layout
  std::stable_sort(gens.begin(), gens.end(),
                   [](const Generator& x, const Generator& y) { return x.cls < y.cls; });

  GLattice q = zero_lattice(g);
  IntMatrix f(rm, 0);
  for (const auto& gen : gens) {
    q = direct_sum(q, b.perms[gen.cls]);
    f = hstack(f, coset_map(b.perms[gen.cls], b.dual_m, gen.image));
    out.perm_summands.push_back(b.cls[gen.cls].label);
  }
  // dualize Q -> M° -> 0; permutation matrices are their own inverse transpose
  out.perm = q.set_name("Q");
  IntMatrix sub = rm ? f : IntMatrix(0, q.rank());
  out.seq = extension_from_sublattice(q, sub);
  out.flabby_part = out.seq.quotient;
  out.flabby_part.set_name("E");
  if (!is_flabby(out.flabby_part))
    throw LatticeError(ErrorCode::NotExact, "flabby resolution produced a non-flabby part");
  return out;
}

// ---- stably permutation ----

std::string PermutationSum::describe() const {
  std::string s;
  for (std::size_t i = 0; i < multiplicity.size(); ++i) {
    if (!multiplicity[i]) continue;
    if (!s.empty()) s += " + ";
    std::string name = labels[i] == "1" ? "Z[G]" : "Z[G/" + labels[i] + "]";
    if (i + 1 == multiplicity.size()) name = "Z";
    s += name;
    if (multiplicity[i] > 1) s += "^" + std::to_string(multiplicity[i]);
  }
  return s.empty() ? "0" : s;
}

PermutationSum permutation_sum(const GroupSpec& g, const std::vector<std::size_t>& mult) {
  auto cls = subgroup_classes(g);
  if (mult.size() != cls.size())
    throw LatticeError(ErrorCode::DimensionMismatch, "one multiplicity per subgroup class");
  PermutationSum ps;
  ps.multiplicity = mult;
  GLattice l = zero_lattice(g);
  for (std::size_t i = 0; i < cls.size(); ++i) {
    ps.labels.push_back(cls[i].label);
    GLattice p = perm_lattice(g, cls[i]);
    for (std::size_t k = 0; k < mult[i]; ++k) l = direct_sum(l, p);
  }
  ps.lattice = l;
  ps.lattice.set_name(ps.describe());
  return ps;
}

StablyPermResult stably_permutation(const GLattice& m, const SearchBudget& budget) {
  if (m.rank() > 0 && !is_flabby(m))
    throw LatticeError(ErrorCode::Precondition, "stably_permutation needs a flabby lattice");
  const GroupSpec& g = m.group();
  auto cls = subgroup_classes(g);
  auto idx = class_indices(g, cls);
  std::vector<Fingerprint> fp_perm;
  for (const auto& s : cls) fp_perm.push_back(fingerprint(perm_lattice(g, s)));
  Fingerprint fp_m = fingerprint(m);
  auto fp_of = [&](const std::vector<std::size_t>& mult) {
    Fingerprint f = fingerprint(zero_lattice(g));
    for (std::size_t i = 0; i < mult.size(); ++i)
      for (std::size_t k = 0; k < mult[i]; ++k) f = f + fp_perm[i];
    return f;
  };
  const std::size_t pad = budget.padding_rank ? budget.padding_rank : 4 * std::max<std::size_t>(m.rank(), 1);
  StablyPermResult res;
  for (std::size_t r1 = 0; r1 <= pad; ++r1) {
    std::vector<std::vector<std::size_t>> p1s;
    enumerate_sums(idx, r1, p1s);
    for (const auto& a : p1s) {
      Fingerprint lhs_fp = fp_m + fp_of(a);
      std::vector<std::vector<std::size_t>> p2s;
      enumerate_sums(idx, m.rank() + r1, p2s);
      // candidates sharing no summand type with P1 first
      std::stable_partition(p2s.begin(), p2s.end(), [&](const std::vector<std::size_t>& b) {
        for (std::size_t i = 0; i < b.size(); ++i)
          if (a[i] && b[i]) return false;
        return true;
      });
      for (const auto& bm : p2s) {
        if (!(fp_of(bm) == lhs_fp)) continue;
        if (res.candidates >= budget.max_candidates) return res;
        ++res.candidates;
        PermutationSum p1 = permutation_sum(g, a);
        PermutationSum p2 = permutation_sum(g, bm);
        GLattice lhs = direct_sum(m, p1.lattice);
        SearchBudget b = budget;
        b.seed = budget.seed + res.candidates;
        IsoResult ir = iso(lhs, p2.lattice, b);
        if (ir.outcome == IsoOutcome::Iso) {
          res.outcome = IsoOutcome::Iso;
          res.witness = StablyPermWitness{p1, p2, *ir.map};
          return res;
        }
      }
    }
  }
  return res;
}

// ---- verdicts ----

std::string to_string(Status s) {
  switch (s) {
    case Status::StablyRational:
      return "StablyRational";
    case Status::RetractRationalOnly:
      return "RetractRationalOnly";
    case Status::NotStablyRational:
      return "NotStablyRational";
    case Status::Unknown:
      return "Unknown";
  }
  return "?";
}

namespace {

// 0 -> M -> Q + P1 -> P2 -> 0 from the resolution and E + P1 = P2
ExtensionSpec stable_sequence(const FlabbyResolution& r, const StablyPermWitness& w) {
  const std::size_t rq = r.perm.rank(), r1 = w.p1.lattice.rank();
  const std::size_t re = r.flabby_part.rank();
  ExtensionSpec e;
  e.sub = r.lattice;
  e.total = direct_sum(r.perm, w.p1.lattice);
  e.quotient = w.p2.lattice;
  IntMatrix inc(rq + r1, r.lattice.rank());
  inc.set_block(0, 0, r.seq.inclusion.matrix);
  IntMatrix pi(re + r1, rq + r1);
  pi.set_block(0, 0, r.seq.projection.matrix);
  for (std::size_t i = 0; i < r1; ++i) pi(re + i, rq + i) = 1;
  e.inclusion = {e.sub, e.total, inc};
  e.projection = {e.total, e.quotient, w.map.matrix * pi};
  e.adapted_basis = IntMatrix::identity(rq + r1);
  return e;
}

}  // namespace

Verdict classify(const GLattice& m, const ClassTable& table, const ClassifyOptions& opt) {
  const GroupSpec& g = m.group();
  const long p = g.n;
  if (!(g.is_dihedral() ? odd_prime(p) : is_prime(p)))
    throw LatticeError(ErrorCode::Unsupported,
                       "classify supports D_p (p odd prime) and C_p, got " + g.name());
  Verdict v;
  v.resolution = flabby_resolution(m);
  const GLattice& e = v.resolution->flabby_part;
  v.flabby_fingerprint = fingerprint(e);

  auto with_witness = [&](const StablyPermWitness& w) {
    v.status = Status::StablyRational;
    v.witness = w;
    v.stable_sequence = stable_sequence(*v.resolution, w);
    if (!v.stable_sequence->verify())
      throw LatticeError(ErrorCode::NotExact, "stable sequence failed to verify");
    v.reason = "flabby class is permutation: E + " + w.p1.describe() + " = " + w.p2.describe();
  };

  if (!g.is_dihedral()) {
    // Steinitz obstruction first; a nontrivial class rules out every witness
    v.steinitz = steinitz_class(e, opt.principality);
    if (!v.steinitz->known_trivial && opt.asserted_nonprincipal) {
      v.status = Status::NotStablyRational;
      v.asserted = true;
      v.reason = "Steinitz class of the flabby part is non-principal (asserted input)";
      return v;
    }
  }
  auto sp = stably_permutation(e, opt.budget);
  if (sp.witness) {
    with_witness(*sp.witness);
    return v;
  }
  if (g.is_dihedral()) {
    auto hp = table.h_plus(p);
    if (hp && *hp == 1) {
      v.status = Status::StablyRational;
      v.by_theorem = true;
      v.reason = "h_p^+ = 1 from the class table";
    } else {
      v.status = Status::RetractRationalOnly;
      v.reason = "flabby class invertible; no permutation witness found";
    }
    return v;
  }
  auto h = table.h(p);
  if (v.steinitz->known_trivial && h && *h == 1) {
    v.status = Status::StablyRational;
    v.by_theorem = true;
    v.reason = "trivial Steinitz class and h_p = 1 from the class table";
  } else {
    v.status = Status::Unknown;
    v.reason = v.steinitz->known_trivial ? "trivial Steinitz class but h_p != 1 or unknown"
                                         : "principality of the Steinitz class inconclusive";
  }
  return v;
}

// ---- anisotropic decompositions ----

Decomposition decompose_anisotropic(const GLattice& m0, const SearchBudget& budget) {
  const GroupSpec& g = m0.group();
  if (!g.is_dihedral() || !odd_prime(g.n))
    throw LatticeError(ErrorCode::Unsupported, "decomposition needs D_p with p an odd prime");
  if (m0.rank() > 0 && !norm_matrix(m0, whole_group(g)).is_zero())
    throw LatticeError(ErrorCode::Precondition, "lattice is not annihilated by the norm");
  const long p = g.n;
  GLattice x = build(CatalogName::X, p), r = build(CatalogName::R, p),
           pp = build(CatalogName::P, p), zm = build(CatalogName::Zminus, p);
  Fingerprint fx = fingerprint(x), fr = fingerprint(r), fpp = fingerprint(pp),
              fz = fingerprint(zm), target = fingerprint(m0);
  const long n = static_cast<long>(m0.rank());
  Decomposition out;
  for (long s0 = n / p; s0 >= 0; --s0)
    for (long s1 = (n - s0 * p) / (p - 1); s1 >= 0; --s1)
      for (long s2 = (n - s0 * p - s1 * (p - 1)) / (p - 1); s2 >= 0; --s2) {
        long t = n - s0 * p - (s1 + s2) * (p - 1);
        Fingerprint f = fingerprint(zero_lattice(g));
        GLattice sum = zero_lattice(g);
        auto add = [&](const GLattice& l, const Fingerprint& fl, long k) {
          for (long i = 0; i < k; ++i) {
            f = f + fl;
            sum = direct_sum(sum, l);
          }
        };
        add(x, fx, s0);
        add(r, fr, s1);
        add(pp, fpp, s2);
        add(zm, fz, t);
        if (!(f == target)) continue;
        if (out.candidates >= budget.max_candidates) return out;
        ++out.candidates;
        SearchBudget b = budget;
        b.seed = budget.seed + out.candidates;
        auto ir = iso(m0, sum, b);
        if (ir.outcome == IsoOutcome::Iso) {
          out.mult = DecompositionMultiplicities{s0, s1, s2, t};
          out.map = ir.map;
          return out;
        }
      }
  return out;
}

long extra_variable_count(const DecompositionMultiplicities& d, long m, long p) {
  return d.s0 * (p + 1) + d.s1 * (p + 2) + d.s2 - d.t - m;
}

}  // namespace latrat
