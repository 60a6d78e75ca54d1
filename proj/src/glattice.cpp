#include "latrat/glattice.hpp"

#include <map>

namespace latrat {

void validate(const GroupSpec& group, const IntMatrix& sigma,
              const IntMatrix& tau) {
  if (!sigma.is_square())
    throw LatticeError(ErrorCode::NotSquare, "sigma matrix is not square");
  const std::size_t r = sigma.rows();
  if (group.is_dihedral()) {
    if (tau.rows() != r || tau.cols() != r)
      throw LatticeError(ErrorCode::DimensionMismatch, "tau matrix shape");
  } else if (!tau.empty()) {
    throw LatticeError(ErrorCode::GroupMismatch, "tau given for a cyclic group");
  }
  if (r == 0) return;
  if (!is_unimodular(sigma))
    throw LatticeError(ErrorCode::NotUnimodular, "sigma is not unimodular");
  IntMatrix id = IntMatrix::identity(r);
  if (power(sigma, static_cast<unsigned long>(group.n)) != id)
    throw LatticeError(ErrorCode::InvalidArgument, "sigma^n != 1");
  if (group.is_dihedral()) {
    if (tau * tau != id)
      throw LatticeError(ErrorCode::InvalidArgument, "tau^2 != 1");
    // tau sigma tau = sigma^{-1}  <=>  tau sigma tau sigma = 1
    if (tau * sigma * tau * sigma != id)
      throw LatticeError(ErrorCode::InvalidArgument,
                         "tau sigma tau != sigma^-1");
  }
}

GLattice::GLattice(GroupSpec group, IntMatrix sigma, IntMatrix tau,
                   std::string name)
    : group_(group),
      sigma_(std::move(sigma)),
      tau_(std::move(tau)),
      name_(std::move(name)) {
  if (group_.is_dihedral() && tau_.empty() && sigma_.rows() == 0)
    tau_ = IntMatrix(0, 0);
  validate(group_, sigma_, tau_);
}

IntMatrix GLattice::rho(GroupElement e) const {
  e = normalize(group_, e);
  IntMatrix m = power(sigma_, static_cast<unsigned long>(e.rot));
  if (e.flip) m = m * tau_;
  return m;
}

std::vector<IntMatrix> GLattice::generator_matrices() const {
  if (group_.is_dihedral()) return {sigma_, tau_};
  return {sigma_};
}

std::vector<IntMatrix> GLattice::generator_matrices(
    const SubgroupClass& s) const {
  std::vector<IntMatrix> out;
  for (const auto& e : s.generators) out.push_back(rho(e));
  return out;
}

std::vector<IntMatrix> GLattice::all_matrices() const {
  std::vector<IntMatrix> out;
  out.reserve(static_cast<std::size_t>(group_.order()));
  IntMatrix cur = IntMatrix::identity(rank());
  for (long i = 0; i < group_.n; ++i) {
    out.push_back(cur);
    cur = sigma_ * cur;
  }
  if (group_.is_dihedral())
    for (long i = 0; i < group_.n; ++i) out.push_back(out[i] * tau_);
  return out;
}

bool GLattice::is_permutation() const {
  if (!sigma_.is_permutation()) return false;
  return !group_.is_dihedral() || tau_.is_permutation();
}

bool LatticeMap::is_equivariant() const {
  if (!(source.group() == target.group())) return false;
  if (matrix.rows() != target.rank() || matrix.cols() != source.rank())
    return false;
  auto gs = source.generator_matrices();
  auto gt = target.generator_matrices();
  for (std::size_t i = 0; i < gs.size(); ++i)
    if (matrix * gs[i] != gt[i] * matrix) return false;
  return true;
}

bool ExtensionSpec::verify() const {
  if (!inclusion.is_equivariant() || !projection.is_equivariant()) return false;
  if (sub.rank() + quotient.rank() != total.rank()) return false;
  if (!(projection.matrix * inclusion.matrix).is_zero()) return false;
  // image saturated and projection surjective
  if (!is_saturated(inclusion.matrix.transpose())) return false;
  if (quotient.rank() == 0) return true;
  auto inv = cokernel_invariants(projection.matrix.transpose());
  return inv.is_trivial();
}

GLattice perm_lattice(const GroupSpec& g, const SubgroupClass& s) {
  // Cosets xS in order of first appearance over elements(g).
  std::vector<std::vector<GroupElement>> cosets;
  std::map<GroupElement, std::size_t> coset_of;
  for (const auto& x : elements(g)) {
    if (coset_of.count(x)) continue;
    std::size_t idx = cosets.size();
    std::vector<GroupElement> c;
    for (const auto& h : s.representative) {
      GroupElement y = multiply(g, x, h);
      coset_of[y] = idx;
      c.push_back(y);
    }
    cosets.push_back(std::move(c));
  }
  const std::size_t r = cosets.size();
  auto action = [&](GroupElement e) {
    std::vector<std::size_t> image(r);
    for (std::size_t j = 0; j < r; ++j)
      image[j] = coset_of.at(multiply(g, e, cosets[j].front()));
    return IntMatrix::permutation(image);
  };
  IntMatrix sig = action(sigma_element());
  IntMatrix ta = g.is_dihedral() ? action(tau_element()) : IntMatrix();
  std::string name = s.size() == static_cast<std::size_t>(g.order())
                         ? "Z"
                         : "Z[G/" + s.label + "]";
  if (s.size() == 1) name = "Z[G]";
  return GLattice(g, std::move(sig), std::move(ta), name);
}

GLattice trivial_lattice(const GroupSpec& g) {
  return GLattice(g, IntMatrix::identity(1),
                  g.is_dihedral() ? IntMatrix::identity(1) : IntMatrix(), "Z");
}

GLattice regular_lattice(const GroupSpec& g) {
  return perm_lattice(g, trivial_subgroup(g));
}

GLattice sign_lattice(const GroupSpec& g) {
  if (!g.is_dihedral())
    throw LatticeError(ErrorCode::GroupMismatch,
                       "sign lattice needs a dihedral group");
  return GLattice(g, IntMatrix{{1}}, IntMatrix{{-1}}, "Z_-");
}

GLattice zero_lattice(const GroupSpec& g) {
  return GLattice(g, IntMatrix(0, 0), g.is_dihedral() ? IntMatrix(0, 0) : IntMatrix(), "0");
}

GLattice direct_sum(const GLattice& a, const GLattice& b) {
  if (!(a.group() == b.group()))
    throw LatticeError(ErrorCode::GroupMismatch, "direct sum of different groups");
  if (a.rank() == 0) return b;
  if (b.rank() == 0) return a;
  IntMatrix t = a.group().is_dihedral() ? block_diagonal(a.tau(), b.tau())
                                        : IntMatrix();
  std::string name;
  if (!a.name().empty() && !b.name().empty()) name = a.name() + " + " + b.name();
  return GLattice(a.group(), block_diagonal(a.sigma(), b.sigma()), t, name);
}

GLattice direct_sum(const std::vector<GLattice>& parts, const GroupSpec& g) {
  GLattice acc = zero_lattice(g);
  for (const auto& p : parts) acc = direct_sum(acc, p);
  return acc;
}

GLattice dual(const GLattice& m) {
  // rho*(g) = rho(g^{-1})^T; tau is an involution.
  IntMatrix s = inverse_unimodular(m.sigma()).transpose();
  IntMatrix t = m.group().is_dihedral() ? m.tau().transpose() : IntMatrix();
  if (m.rank() == 0) s = IntMatrix(0, 0);
  return GLattice(m.group(), s, t, m.name().empty() ? "" : m.name() + "°");
}

GLattice restrict(const GLattice& m, const SubgroupClass& s) {
  GroupSpec h = s.abstract_group();
  const std::size_t r = m.rank();
  IntMatrix sig = IntMatrix::identity(r);
  IntMatrix ta;
  if (h.is_dihedral()) {
    sig = m.rho(s.generators.at(0));
    ta = m.rho(s.generators.at(1));
  } else if (!s.generators.empty()) {
    sig = m.rho(s.generators.at(0));
  }
  return GLattice(h, sig, ta);
}

IntMatrix fixed_sublattice(const GLattice& m, const SubgroupClass& s) {
  const std::size_t r = m.rank();
  if (r == 0) return IntMatrix(0, 0);
  IntMatrix id = IntMatrix::identity(r);
  IntMatrix stacked(r, 0);
  for (const auto& g : m.generator_matrices(s))
    stacked = hstack(stacked, (g - id).transpose());
  if (stacked.cols() == 0) return id;
  return kernel_basis(stacked);
}

IntMatrix norm_matrix(const GLattice& m, const SubgroupClass& s) {
  IntMatrix acc(m.rank(), m.rank());
  for (const auto& e : s.representative) acc = acc + m.rho(e);
  return acc;
}

namespace {

// Coordinates of the columns of images in the given row basis (rows of the
// result are coordinate vectors). Throws if not in the lattice.
IntMatrix coords_in(const IntMatrix& basis, const IntMatrix& column_images,
                    ErrorCode code) {
  auto c = solve_left(basis, column_images.transpose());
  if (!c) throw LatticeError(code, "sublattice is not G-stable");
  return *c;
}

}  // namespace

bool is_stable(const GLattice& m, const IntMatrix& basis) {
  if (basis.rows() == 0) return true;
  for (const auto& g : m.generator_matrices())
    if (!solve_left(basis, (g * basis.transpose()).transpose())) return false;
  return true;
}

GLattice sublattice_action(const GLattice& m, const IntMatrix& basis) {
  if (basis.rows() == 0) return zero_lattice(m.group());
  if (basis.cols() != m.rank())
    throw LatticeError(ErrorCode::DimensionMismatch, "sublattice basis width");
  IntMatrix bt = basis.transpose();
  IntMatrix s = coords_in(basis, m.sigma() * bt, ErrorCode::NotStable).transpose();
  IntMatrix t;
  if (m.group().is_dihedral())
    t = coords_in(basis, m.tau() * bt, ErrorCode::NotStable).transpose();
  return GLattice(m.group(), s, t);
}

ExtensionSpec extension_from_sublattice(const GLattice& m,
                                        const IntMatrix& sub_basis) {
  const std::size_t n = m.rank();
  const std::size_t k = sub_basis.rows();
  if (k > 0 && sub_basis.cols() != n)
    throw LatticeError(ErrorCode::DimensionMismatch, "sublattice basis width");
  IntMatrix sub = k ? sub_basis : IntMatrix(0, n);
  if (!is_saturated(sub))
    throw LatticeError(ErrorCode::NotSaturated, "sublattice is not saturated");
  if (!is_stable(m, sub))
    throw LatticeError(ErrorCode::NotStable, "sublattice is not G-stable");
  IntMatrix comp = complete_basis(sub);
  IntMatrix w = vstack(sub, comp);
  if (w.rows() == 0) w = IntMatrix(0, 0);
  IntMatrix winv = n ? inverse_unimodular(w) : IntMatrix(0, 0);
  IntMatrix proj = winv.submatrix(0, n, k, n).transpose();  // (n-k) x n

  ExtensionSpec e;
  e.total = m;
  e.sub = sublattice_action(m, sub);
  IntMatrix qs = proj * m.sigma() * comp.transpose();
  IntMatrix qt;
  if (m.group().is_dihedral()) qt = proj * m.tau() * comp.transpose();
  if (n == k) {
    qs = IntMatrix(0, 0);
    if (m.group().is_dihedral()) qt = IntMatrix(0, 0);
  }
  e.quotient = GLattice(m.group(), qs, qt);
  e.inclusion = {e.sub, m, sub.transpose()};
  if (k == 0) e.inclusion.matrix = IntMatrix(n, 0);
  e.projection = {m, e.quotient, proj};
  e.adapted_basis = w;
  return e;
}

GLattice quotient_lattice(const GLattice& m, const IntMatrix& sub_basis) {
  return extension_from_sublattice(m, sub_basis).quotient;
}

ExtensionSpec anisotropic_sublattice(const GLattice& m) {
  IntMatrix nm = norm_matrix(m, whole_group(m.group()));
  // M_0 = {x : N x = 0} = {x : x N^T = 0}
  IntMatrix k = m.rank() ? kernel_basis(nm.transpose()) : IntMatrix(0, 0);
  if (k.rows() == 0) k = IntMatrix(0, m.rank());
  return extension_from_sublattice(m, k);
}

GLattice induce(const GroupSpec& g, int tau_sign) {
  if (!g.is_dihedral())
    throw LatticeError(ErrorCode::GroupMismatch, "induce needs a dihedral group");
  const long n = g.n;
  std::vector<std::size_t> a(n), b(n);
  for (long i = 0; i < n; ++i) {
    a[i] = static_cast<std::size_t>((i + 1) % n);
    b[i] = static_cast<std::size_t>((n - i) % n);
  }
  IntMatrix bm = IntMatrix::permutation(b);
  if (tau_sign < 0) bm = -bm;
  return GLattice(g, IntMatrix::permutation(a), bm, tau_sign < 0 ? "M_-" : "M_+");
}

GLattice change_basis(const GLattice& m, const IntMatrix& p) {
  IntMatrix pinv = inverse_unimodular(p);
  IntMatrix s = pinv * m.sigma() * p;
  IntMatrix t = m.group().is_dihedral() ? pinv * m.tau() * p : IntMatrix();
  return GLattice(m.group(), s, t, m.name());
}

GLattice permute_basis(const GLattice& m,
                       const std::vector<std::size_t>& order) {
  if (order.size() != m.rank())
    throw LatticeError(ErrorCode::DimensionMismatch, "basis order length");
  IntMatrix p(m.rank(), m.rank());
  for (std::size_t i = 0; i < order.size(); ++i) p(order[i], i) = 1;
  return change_basis(m, p);
}

}  // namespace latrat
