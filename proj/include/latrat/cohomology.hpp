#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latrat/glattice.hpp"

namespace latrat {

AbelianInvariants tate_hminus1(const GLattice& m, const SubgroupClass& s);
AbelianInvariants tate_h0(const GLattice& m, const SubgroupClass& s);
/// Periodicity for cyclic S, a presentation of S for dihedral S.
AbelianInvariants h1(const GLattice& m, const SubgroupClass& s);
/// Z^1/B^1 from the full cocycle system over S x S.
AbelianInvariants h1_bar(const GLattice& m, const SubgroupClass& s);

struct CohomologyRow {
  std::string subgroup;
  AbelianInvariants hminus1;
  AbelianInvariants h0;
  AbelianInvariants h1;
};

struct CohomologyTable {
  std::string lattice;
  std::vector<CohomologyRow> rows;
};

CohomologyTable cohomology_table(const GLattice& m);

struct CohomologyCheck {
  bool holds = true;
  std::string failing_subgroup;  // empty when holds
  AbelianInvariants value;       // nonzero group at the failing subgroup

  explicit operator bool() const { return holds; }
};

CohomologyCheck is_flabby(const GLattice& m);
CohomologyCheck is_coflabby(const GLattice& m);

/// Hom_Z(a, b) with g.X = rho_b(g) X rho_a(g)^{-1}, on row-major coordinates.
GLattice hom_lattice(const GLattice& a, const GLattice& b);
AbelianInvariants ext1(const GLattice& a, const GLattice& b);

}  // namespace latrat
