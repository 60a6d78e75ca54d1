#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latrat/glattice.hpp"

namespace latrat {

/// Element of Z[zeta_p] on the power basis 1, zeta, ..., zeta^{p-2}.
using Cyc = std::vector<Int>;

Cyc cyc_reduce(long p, std::vector<Int> poly);
Cyc cyc_one(long p);
Cyc cyc_zeta_power(long p, long k);
Cyc cyc_mul(long p, const Cyc& a, const Cyc& b);
Cyc cyc_add(const Cyc& a, const Cyc& b);
Cyc cyc_scale(const Cyc& a, const Int& s);
/// zeta -> zeta^k
Cyc cyc_galois(long p, const Cyc& a, long k);
Cyc cyc_conj(long p, const Cyc& a);
/// Column j is a * zeta^j.
IntMatrix mult_matrix(long p, const Cyc& a);
Int cyc_norm(long p, const Cyc& a);
/// Tr(x conj(y)) on the power basis: p I - J.
IntMatrix trace_gram(long p);

/// theta = zeta + zeta^{-1}; rows are the power coordinates of theta^j.
IntMatrix real_basis_in_power(long p);

struct IdealHNF {
  long p = 3;
  bool real_subfield = false;
  IntMatrix basis;  // square, HNF rows

  std::size_t degree() const {
    return static_cast<std::size_t>(real_subfield ? (p - 1) / 2 : p - 1);
  }
  Int norm() const;
  bool operator==(const IdealHNF&) const = default;
};

/// Throws InvalidArgument unless basis is full rank and closed under zeta
/// (theta for the real subfield); returns the HNF-normalized ideal.
IdealHNF make_ideal(long p, const IntMatrix& rows, bool real_subfield = false);
IdealHNF unit_ideal(long p, bool real_subfield = false);
IdealHNF ideal_from_generators(long p, const std::vector<Cyc>& gens);
IdealHNF real_ideal_from_generators(long p, const std::vector<std::vector<Int>>& gens);
IdealHNF principal_ideal(long p, const Cyc& a);
IdealHNF ideal_product(const IdealHNF& a, const IdealHNF& b);
bool ideal_contains(const IdealHNF& i, const Cyc& x);
/// norm(i) * i^{-1}, an integral ideal in the inverse class.
IdealHNF integral_inverse(const IdealHNF& i);
/// R * A for an ideal of the real subfield.
IdealHNF extend_to_full(const IdealHNF& a);
/// A ∩ Z = a Z.
Int rational_part(const IdealHNF& i);

/// Primes of Z[zeta_p] above ell, as (ideal, residue degree).
std::vector<std::pair<IdealHNF, long>> primes_above(long p, const Int& ell);

/// C_p-lattice structure of an ideal (sigma = multiplication by zeta).
GLattice ideal_lattice(const IdealHNF& i);
/// D_p-lattice: sigma = zeta, tau = complex conjugation.
GLattice ideal_lattice_dihedral(const IdealHNF& i);

struct LLLResult {
  IntMatrix basis;  // reduced rows
  IntMatrix transform;
};
/// Integral LLL (delta = 3/4) of the rows of b under the positive definite
/// integer Gram form.
LLLResult lll_reduce(const IntMatrix& b, const IntMatrix& gram);

struct PrincipalityOptions {
  std::vector<double> factors{1.25, 2.0, 4.0, 8.0};
  std::size_t max_points = 400000;
};

struct Principality {
  bool found = false;
  Cyc generator;
  std::size_t points = 0;  // lattice points examined
  explicit operator bool() const { return found; }
};

/// Searches short elements with |N(alpha)| = N(i); a hit is re-verified by
/// HNF equality. Never refutes.
Principality principality(const IdealHNF& i, const PrincipalityOptions& opt = {});

/// Finite Z[zeta]-module Z^k / rowspan(relations), zeta acting on columns.
struct TorsionModule {
  long p = 3;
  IntMatrix relations;
  IntMatrix zeta;

  std::size_t dim() const { return zeta.rows(); }
  AbelianInvariants invariants() const { return cokernel_invariants(relations); }
  Int order() const;
};

IdealHNF order_ideal(const TorsionModule& t);

struct N0N1 {
  IntMatrix n0;
  IntMatrix n1;
};
N0N1 n0_and_n1(const GLattice& n);

struct IdealModule {
  std::size_t t = 0;
  GLattice quotient;  // N / N_0
  IntMatrix free_generators;  // t rows in quotient coordinates
  IntMatrix free_sub;         // t(p-1) rows: zeta-orbits of the generators
  TorsionModule torsion;
};
IdealModule ideal_module(const GLattice& n);

struct SteinitzClassRep {
  IdealHNF ideal;
  bool known_trivial = false;
  std::optional<Cyc> generator;
};

SteinitzClassRep steinitz_class(const GLattice& n, const PrincipalityOptions& opt = {});

enum class Tri { True, False, Unknown };
std::string to_string(Tri t);

/// cl(total) == cl(sub) cl(quotient); Unknown when principality is inconclusive.
Tri class_multiplicativity_check(const ExtensionSpec& ext,
                                 const PrincipalityOptions& opt = {});

struct ClassEntry {
  long p = 3;
  std::optional<long> h;
  long h_plus = 1;
  std::string source;
};

class ClassTable {
 public:
  static ClassTable defaults();
  void set(ClassEntry e) { entries_[e.p] = std::move(e); }
  const ClassEntry* find(long p) const;
  std::optional<long> h(long p) const;
  std::optional<long> h_plus(long p) const;
  const std::map<long, ClassEntry>& entries() const { return entries_; }

 private:
  std::map<long, ClassEntry> entries_;
};

/// Every prime ideal below the Minkowski bound is shown principal. True
/// certifies h_p = 1; Unknown when a search is inconclusive.
Tri minkowski_class_number_one(long p, const PrincipalityOptions& opt = {});
double minkowski_bound(long p);

}  // namespace latrat
