#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "latrat/cohomology.hpp"
#include "latrat/glattice.hpp"
#include "latrat/steinitz.hpp"

namespace latrat {

struct FingerprintRow {
  std::string subgroup;
  std::size_t fixed_rank = 0;
  AbelianInvariants hminus1;
  AbelianInvariants h0;
  AbelianInvariants h1;
  bool operator==(const FingerprintRow&) const = default;
};

struct Fingerprint {
  std::size_t rank = 0;
  std::vector<FingerprintRow> rows;  // subgroup_classes order

  bool operator==(const Fingerprint&) const = default;
  /// First differing field, e.g. "h1 at D_1: Z/2 vs 0"; empty when equal.
  std::string difference(const Fingerprint& other) const;
};

Fingerprint fingerprint(const GLattice& m);
Fingerprint operator+(const Fingerprint& a, const Fingerprint& b);

struct SearchBudget {
  long box_radius = 3;
  std::size_t random_draws = 100000;
  std::size_t padding_rank = 0;  // 0: 4 * rank
  std::size_t max_box = 200000;  // cap on exhaustive box points
  std::size_t max_candidates = 64;
  std::size_t max_hom_entries = 4096;  // rank(a) * rank(b) above this: Unknown
  std::uint64_t seed = 0;
};

enum class IsoOutcome { Iso, NonIso, Unknown };
std::string to_string(IsoOutcome o);

struct IsoResult {
  IsoOutcome outcome = IsoOutcome::Unknown;
  std::optional<LatticeMap> map;  // a -> b, verified
  std::string reason;
  std::size_t tried = 0;
  explicit operator bool() const { return outcome == IsoOutcome::Iso; }
};

/// Equivariant Z-basis of Hom_G(a, b), each rank(b) x rank(a).
std::vector<IntMatrix> equivariant_hom_basis(const GLattice& a, const GLattice& b);

IsoResult iso(const GLattice& a, const GLattice& b, const SearchBudget& budget = {},
              const std::vector<IntMatrix>& hints = {});

struct FlabbyResolution {
  GLattice lattice;
  GLattice perm;
  GLattice flabby_part;
  ExtensionSpec seq;  // 0 -> lattice -> perm -> flabby_part -> 0
  std::vector<std::string> perm_summands;  // subgroup labels
};

FlabbyResolution flabby_resolution(const GLattice& m);

struct PermutationSum {
  std::vector<std::size_t> multiplicity;  // per subgroup class
  std::vector<std::string> labels;
  GLattice lattice;
  std::string describe() const;
};

PermutationSum permutation_sum(const GroupSpec& g, const std::vector<std::size_t>& mult);

struct StablyPermWitness {
  PermutationSum p1;
  PermutationSum p2;
  LatticeMap map;  // m + p1 -> p2
};

struct StablyPermResult {
  IsoOutcome outcome = IsoOutcome::Unknown;
  std::optional<StablyPermWitness> witness;
  std::size_t candidates = 0;
  explicit operator bool() const { return witness.has_value(); }
};

StablyPermResult stably_permutation(const GLattice& m, const SearchBudget& budget = {});

enum class Status { StablyRational, RetractRationalOnly, NotStablyRational, Unknown };
std::string to_string(Status s);

struct ClassifyOptions {
  SearchBudget budget;
  /// External assertion that the C_p input has non-principal Steinitz class.
  bool asserted_nonprincipal = false;
  PrincipalityOptions principality;
};

struct Verdict {
  Status status = Status::Unknown;
  bool by_theorem = false;
  bool asserted = false;
  std::string reason;
  std::optional<FlabbyResolution> resolution;
  std::optional<StablyPermWitness> witness;
  /// 0 -> M -> Q + P1 -> P2 -> 0, present with an explicit witness
  std::optional<ExtensionSpec> stable_sequence;
  std::optional<SteinitzClassRep> steinitz;
  Fingerprint flabby_fingerprint;
};

Verdict classify(const GLattice& m, const ClassTable& table,
                 const ClassifyOptions& opt = {});

struct DecompositionMultiplicities {
  long s0 = 0;  // X
  long s1 = 0;  // R
  long s2 = 0;  // P
  long t = 0;   // Z_-
  bool operator==(const DecompositionMultiplicities&) const = default;
};

struct Decomposition {
  std::optional<DecompositionMultiplicities> mult;
  std::optional<LatticeMap> map;  // m0 -> sum
  std::size_t candidates = 0;
};

Decomposition decompose_anisotropic(const GLattice& m0, const SearchBudget& budget = {});

long extra_variable_count(const DecompositionMultiplicities& mult, long m, long p);

}  // namespace latrat
