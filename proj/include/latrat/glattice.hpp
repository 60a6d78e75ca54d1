#pragma once

#include <string>
#include <vector>

#include "latrat/exactla.hpp"
#include "latrat/groups.hpp"

namespace latrat {

/// G acting on Z^rank; matrices act on column vectors.
class GLattice {
 public:
  GLattice() = default;
  /// Validates unimodularity and the defining relations.
  GLattice(GroupSpec group, IntMatrix sigma, IntMatrix tau = {},
           std::string name = {});

  const GroupSpec& group() const { return group_; }
  std::size_t rank() const { return sigma_.rows(); }
  const IntMatrix& sigma() const { return sigma_; }
  const IntMatrix& tau() const { return tau_; }
  const std::string& name() const { return name_; }
  GLattice& set_name(std::string name) {
    name_ = std::move(name);
    return *this;
  }

  IntMatrix rho(GroupElement e) const;
  std::vector<IntMatrix> generator_matrices() const;
  /// Matrices of the subgroup's generators (sigma', tau' order).
  std::vector<IntMatrix> generator_matrices(const SubgroupClass& s) const;
  /// All |G| matrices in element order.
  std::vector<IntMatrix> all_matrices() const;

  bool is_permutation() const;
  bool same_action(const GLattice& other) const {
    return group_ == other.group_ && sigma_ == other.sigma_ &&
           tau_ == other.tau_;
  }

 private:
  GroupSpec group_;
  IntMatrix sigma_;
  IntMatrix tau_;
  std::string name_;
};

/// Checks the relation invariants; throws LatticeError(NotUnimodular or
/// InvalidArgument) on failure.
void validate(const GroupSpec& group, const IntMatrix& sigma,
              const IntMatrix& tau);

struct LatticeMap {
  GLattice source;
  GLattice target;
  IntMatrix matrix;  // target.rank x source.rank

  bool is_equivariant() const;
};

struct ExtensionSpec {
  GLattice sub;
  GLattice total;
  GLattice quotient;
  LatticeMap inclusion;
  LatticeMap projection;
  /// Rows of total-coordinates: sub basis followed by quotient lifts.
  IntMatrix adapted_basis;

  bool verify() const;
};

GLattice perm_lattice(const GroupSpec& g, const SubgroupClass& s);
GLattice trivial_lattice(const GroupSpec& g);
GLattice regular_lattice(const GroupSpec& g);
GLattice sign_lattice(const GroupSpec& g);
GLattice zero_lattice(const GroupSpec& g);

GLattice direct_sum(const GLattice& a, const GLattice& b);
GLattice direct_sum(const std::vector<GLattice>& parts, const GroupSpec& g);
GLattice dual(const GLattice& m);
/// Lattice over s.abstract_group() with the subgroup's generators.
GLattice restrict(const GLattice& m, const SubgroupClass& s);

/// Saturated row basis of M^S.
IntMatrix fixed_sublattice(const GLattice& m, const SubgroupClass& s);
/// Sum of rho(g) over g in s.
IntMatrix norm_matrix(const GLattice& m, const SubgroupClass& s);

ExtensionSpec anisotropic_sublattice(const GLattice& m);

/// Action on a G-stable sublattice given by independent rows.
GLattice sublattice_action(const GLattice& m, const IntMatrix& basis);
/// 0 -> sub -> m -> m/sub -> 0 for a saturated G-stable sublattice.
ExtensionSpec extension_from_sublattice(const GLattice& m,
                                        const IntMatrix& sub_basis);
GLattice quotient_lattice(const GLattice& m, const IntMatrix& sub_basis);

/// Ind from <tau> of Z (sign +1) or Z_- (sign -1).
GLattice induce(const GroupSpec& g, int tau_sign);

/// New basis given by the columns of p (old coordinates); p unimodular.
GLattice change_basis(const GLattice& m, const IntMatrix& p);
/// New basis vector i is old basis vector order[i].
GLattice permute_basis(const GLattice& m, const std::vector<std::size_t>& order);

bool is_stable(const GLattice& m, const IntMatrix& basis);

}  // namespace latrat
