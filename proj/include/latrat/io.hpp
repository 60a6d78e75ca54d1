#pragma once

#include <string>

#include "json.hpp"
#include "latrat/catalog.hpp"
#include "latrat/cohomology.hpp"
#include "latrat/rationality.hpp"
#include "latrat/steinitz.hpp"

namespace latrat {

using Json = nlohmann::json;

/// Numbers when they fit in 64 bits, decimal strings otherwise.
Json to_json(const Int& x);
Int int_from_json(const Json& j);

Json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j, std::size_t cols_if_empty = 0);

Json to_json(const GroupSpec& g);
GroupSpec group_from_json(const Json& j);

/// {"group", "rank", "sigma", "tau", "name"}; tau absent for cyclic groups.
Json to_json(const GLattice& m);
GLattice lattice_from_json(const Json& j);

Json to_json(const LatticeMap& m);
LatticeMap map_from_json(const Json& j, const GLattice& source, const GLattice& target);

Json to_json(const AbelianInvariants& a);
AbelianInvariants invariants_from_json(const Json& j);

Json to_json(const CohomologyTable& t);
CohomologyTable cohomology_from_json(const Json& j);

Json to_json(const IdealHNF& i);
IdealHNF ideal_from_json(const Json& j);

Json to_json(const ClassEntry& e);
ClassEntry class_entry_from_json(const Json& j);
/// A single entry or a list of entries.
Json to_json(const ClassTable& t);
ClassTable class_table_from_json(const Json& j);

Json to_json(const Fingerprint& f);
Fingerprint fingerprint_from_json(const Json& j);

Json to_json(const DecompositionMultiplicities& d);
DecompositionMultiplicities multiplicities_from_json(const Json& j);

Json to_json(const SearchBudget& b);
SearchBudget budget_from_json(const Json& j);

// reports
Json to_json(const ExtensionSpec& e);
Json to_json(const Witness& w);
Json to_json(const IsoResult& r);
Json to_json(const FlabbyResolution& r);
Json to_json(const StablyPermWitness& w);
Json to_json(const SteinitzClassRep& s);
Json to_json(const Verdict& v);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace latrat
