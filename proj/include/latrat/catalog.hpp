#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latrat/glattice.hpp"

namespace latrat {

struct IdealHNF;
class ClassTable;

enum class CatalogName {
  Z,
  Zminus,
  ZH,
  ZGmodTau,
  ZG,
  Mplus,
  Mminus,
  Nplus,
  Nminus,
  MplusTilde,
  MminusTilde,
  R,
  P,
  V,
  X,
  Y0,
  Y1,
  Y2,
};

std::string to_string(CatalogName name);
std::optional<CatalogName> catalog_name_from_string(const std::string& s);
std::vector<CatalogName> all_catalog_names();
bool is_lee_name(CatalogName name);

bool is_prime(long n);

GLattice build(CatalogName name, long n);

/// Circ(c): entry (i, j) = c[(i - j) mod n].
IntMatrix circulant(const std::vector<Int>& c);
IntMatrix circulant(const std::vector<long>& c);
/// Coefficient patterns of the two circulant determinant identities.
std::vector<long> circulant_pattern_half(long n);
std::vector<long> circulant_pattern_unit(long n);

enum class WitnessId { T34, T35, T37, L46 };

std::string to_string(WitnessId id);
std::optional<WitnessId> witness_id_from_string(const std::string& s);

struct Witness {
  WitnessId id = WitnessId::T34;
  long n = 3;
  GLattice lhs;
  GLattice rhs;
  /// As printed: columns are coordinates for T34/T35/T37, rows for L46.
  IntMatrix change_of_basis;
  /// rhs.rho(g) * intertwiner == intertwiner * lhs.rho(g).
  IntMatrix intertwiner;
};

Witness witness(WitnessId id, long n);

struct WitnessCheck {
  bool ok = false;
  std::string detail;
  explicit operator bool() const { return ok; }
};

WitnessCheck verify_witness(const Witness& w);

/// The ten indecomposables for h_p^+ = 1: Z, Z_-, Z[H], R, P, V, X, Y0, Y1, Y2.
std::vector<std::pair<CatalogName, GLattice>> lee_census(long p);
/// Same, checking h_p^+ = 1 against the given table.
std::vector<std::pair<CatalogName, GLattice>> lee_census(long p, const ClassTable& table);

/// (base ideal) * A as a G-lattice; A is an ideal of the real subfield.
GLattice twisted_lattice(CatalogName base, const IdealHNF& a);

}  // namespace latrat
