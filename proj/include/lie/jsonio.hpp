#pragma once

#include <json.hpp>

#include "lie/algebraicity.hpp"
#include "lie/catalog.hpp"
#include "lie/jordan.hpp"
#include "lie/lattice.hpp"
#include "lie/matrix.hpp"
#include "lie/replica.hpp"
#include "lie/subalgebra.hpp"
#include "lie/subspace.hpp"

namespace lie::jsonio {

using nlohmann::json;

// One wire schema shared by every subcommand: rationals travel as the
// strings "p" / "p/q", matrices as {"dim", "entries"} row-major.

json to_json(const Rational& q);
Rational rational_from_json(const json& j);

json to_json(const QMatrix& m);
QMatrix matrix_from_json(const json& j);

json to_json(const Subspace& s);                 // {"dim", "basis"}
Subspace subspace_from_json(const json& j);

json to_json(const LieSubalgebra& L);            // same shape; closure re-certified on read
LieSubalgebra subalgebra_from_json(const json& j);

json to_json(const StructureConstants& cc);      // {"c": [[[...]]]}
json to_json(const IntegerLattice& lattice);     // [[ints]]

json to_json(const JordanPair& pair);            // {"semisimple", "nilpotent"}
json to_json(const ReplicaResult& result);
json to_json(const Witness& witness);
json to_json(const Verdict& verdict);
json to_json(const Adjunction& adjunction);
json to_json(const HullReport& report);
json to_json(const NilpotentDecomposition& decomposition);
json to_json(const ComparisonReport& report);
json to_json(const FiliformRep& rep);

}  // namespace lie::jsonio
