#include "latrat/cohomology.hpp"

#include <algorithm>

namespace latrat {

namespace {

// (coordinates of the rows of gens in the row basis) -> quotient invariants
AbelianInvariants quotient_of(const IntMatrix& basis, const IntMatrix& gens) {
  if (basis.rows() == 0) return {};
  if (gens.rows() == 0) return cokernel_invariants(IntMatrix(0, basis.rows()));
  auto coords = solve_left(basis, gens);
  if (!coords)
    throw LatticeError(ErrorCode::Precondition,
                       "boundary not contained in cycles");
  return cokernel_invariants(*coords);
}

IntMatrix kernel_of_columns(const IntMatrix& a) {
  // {x : a x = 0} as rows
  if (a.cols() == 0) return IntMatrix(0, 0);
  if (a.rows() == 0) return IntMatrix::identity(a.cols());
  IntMatrix k = kernel_basis(a.transpose());
  if (k.rows() == 0) return IntMatrix(0, a.cols());
  return k;
}

IntMatrix augmentation_image(const GLattice& m, const SubgroupClass& s) {
  const std::size_t r = m.rank();
  IntMatrix id = IntMatrix::identity(r);
  IntMatrix rows(0, r);
  for (const auto& g : m.generator_matrices(s))
    rows = vstack(rows, (g - id).transpose());
  return rows;
}

}  // namespace

AbelianInvariants tate_hminus1(const GLattice& m, const SubgroupClass& s) {
  if (m.rank() == 0) return {};
  IntMatrix kn = kernel_of_columns(norm_matrix(m, s));
  return quotient_of(kn, augmentation_image(m, s));
}

AbelianInvariants tate_h0(const GLattice& m, const SubgroupClass& s) {
  if (m.rank() == 0) return {};
  IntMatrix fixed = fixed_sublattice(m, s);
  return quotient_of(fixed, norm_matrix(m, s).transpose());
}

AbelianInvariants h1(const GLattice& m, const SubgroupClass& s) {
  if (m.rank() == 0 || s.size() == 1) return {};
  if (s.is_cyclic()) return tate_hminus1(m, s);
  // <r, t | r^d, t^2, (t r)^2>; unknowns a = f(r), b = f(t).
  const std::size_t n = m.rank();
  const long d = static_cast<long>(s.size()) / 2;
  IntMatrix r = m.rho(s.generators.at(0));
  IntMatrix t = m.rho(s.generators.at(1));
  IntMatrix id = IntMatrix::identity(n);
  IntMatrix norm_r(n, n), rp = id;
  for (long i = 0; i < d; ++i) {
    norm_r = norm_r + rp;
    rp = r * rp;
  }
  IntMatrix tr = t * r;
  IntMatrix c(3 * n, 2 * n);
  c.set_block(0, 0, norm_r);
  c.set_block(n, n, id + t);
  c.set_block(2 * n, n, id + tr);
  c.set_block(2 * n, 0, t + tr * t);
  IntMatrix cocycles = kernel_of_columns(c);
  IntMatrix coboundaries = vstack(r - id, t - id).transpose();
  return quotient_of(cocycles, coboundaries);
}

AbelianInvariants h1_bar(const GLattice& m, const SubgroupClass& s) {
  const std::size_t n = m.rank();
  if (n == 0) return {};
  const GroupSpec& g = m.group();
  const auto& els = s.representative;
  const std::size_t k = els.size();
  auto pos = [&](GroupElement e) {
    return static_cast<std::size_t>(
        std::lower_bound(els.begin(), els.end(), e) - els.begin());
  };
  std::vector<IntMatrix> rho;
  for (const auto& e : els) rho.push_back(m.rho(e));
  // f(xy) - f(x) - x f(y) = 0
  IntMatrix c(k * k * n, k * n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t row0 = (i * k + j) * n;
      const std::size_t xy = pos(multiply(g, els[i], els[j]));
      for (std::size_t a = 0; a < n; ++a) {
        c(row0 + a, xy * n + a) += 1;
        c(row0 + a, i * n + a) -= 1;
        for (std::size_t b = 0; b < n; ++b)
          c(row0 + a, j * n + b) -= rho[i](a, b);
      }
    }
  IntMatrix cocycles = kernel_of_columns(c);
  IntMatrix cob(k * n, n);
  IntMatrix id = IntMatrix::identity(n);
  for (std::size_t i = 0; i < k; ++i) cob.set_block(i * n, 0, rho[i] - id);
  return quotient_of(cocycles, cob.transpose());
}

CohomologyTable cohomology_table(const GLattice& m) {
  CohomologyTable t;
  t.lattice = m.name();
  for (const auto& s : subgroup_classes(m.group()))
    t.rows.push_back({s.label, tate_hminus1(m, s), tate_h0(m, s), h1(m, s)});
  return t;
}

namespace {

template <class F>
CohomologyCheck vanishes_everywhere(const GLattice& m, F f) {
  CohomologyCheck out;
  for (const auto& s : subgroup_classes(m.group())) {
    AbelianInvariants v = f(m, s);
    if (!v.is_trivial()) {
      out.holds = false;
      out.failing_subgroup = s.label;
      out.value = v;
      return out;
    }
  }
  return out;
}

}  // namespace

CohomologyCheck is_flabby(const GLattice& m) {
  return vanishes_everywhere(m, tate_hminus1);
}

CohomologyCheck is_coflabby(const GLattice& m) {
  return vanishes_everywhere(
      m, [](const GLattice& x, const SubgroupClass& s) { return h1(x, s); });
}

GLattice hom_lattice(const GLattice& a, const GLattice& b) {
  if (!(a.group() == b.group()))
    throw LatticeError(ErrorCode::GroupMismatch, "hom between different groups");
  auto act = [](const IntMatrix& ra, const IntMatrix& rb) {
    return kronecker(rb, inverse_unimodular(ra).transpose());
  };
  const std::size_t r = a.rank() * b.rank();
  if (r == 0) return zero_lattice(a.group());
  IntMatrix s = act(a.sigma(), b.sigma());
  IntMatrix t = a.group().is_dihedral() ? act(a.tau(), b.tau()) : IntMatrix();
  return GLattice(a.group(), s, t, "Hom(" + a.name() + ", " + b.name() + ")");
}

AbelianInvariants ext1(const GLattice& a, const GLattice& b) {
  GLattice h = hom_lattice(a, b);
  return h1(h, whole_group(h.group()));
}

}  // namespace latrat
