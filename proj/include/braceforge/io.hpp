#pragma once

#include <json.hpp>

#include "braceforge/brace.hpp"
#include "braceforge/census.hpp"
#include "braceforge/perm.hpp"
#include "braceforge/ring.hpp"
#include "braceforge/solution.hpp"
#include "braceforge/structure_group.hpp"

namespace braceforge {

// ordered_json keeps field order stable for bit-exact round trips
using Json = nlohmann::ordered_json;

// {"size": m, "lambda": [[...]]}; "rho" only on request
Json solution_to_json(const Solution& S, bool with_rho = false);
Solution solution_from_json(const Json& j);

// {"degree": n, "generators": [[images]...]}
Json group_to_json(const PermGroup& G);
PermGroup group_from_json(const Json& j, long long cap = 1000000);

// {"repr":"table","order":N,"add":...,"lambda":...,"zero":z}
// or {"repr":"vector","modulus":n,"dim":m,"lambda":[[coord perm]...]}
Json brace_to_json(const FiniteBrace& B);
FiniteBrace brace_from_json(const Json& j);

// brace plus {"modulus", "inject": [vectors]}
Json embedding_to_json(const EmbeddingResult& E);

// {"k":k,"dim":d,"mul":[[[coeffs]]],"unital":bool,"one":[coeffs]?}
Json ring_to_json(const FiniteRing& R);
FiniteRing ring_from_json(const Json& j);

Json census_record_to_json(const CensusRecord& rec);

Json mpl_to_json(const MplResult& r); // integer or "infinite"

} // namespace braceforge
