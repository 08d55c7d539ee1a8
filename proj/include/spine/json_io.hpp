#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "spine/graded_algebra.hpp"
#include "spine/spine_semigroup.hpp"

namespace spine {

using Json = nlohmann::json;

// Rationals are always "p/q" strings, never numbers. Readers raise
// SyntaxError for text that is not JSON and Error(semantic) for JSON that
// does not match the schema.

Json to_json(RationalVector const& v);
RationalVector vector_from_json(Json const& j);

// Basis rows of the canonical echelon form: [["1","0"],["0","1"]].
Json to_json(RationalSubspace const& l);
RationalSubspace subspace_from_json(Json const& j, std::size_t dim);

// {"kind":"subspace","dim":n,"basis":[...]}, {"kind":"two_point","level":"ap"},
// {"kind":"axb","level":"realline"},
// {"kind":"q","top":false,"generators":["R","2"]}.
Json to_json(TopologyGrade const& g);
TopologyGrade grade_from_json(Model const& m, Json const& j);

// {"re":"p/q","im":"p/q"} for Gaussian rationals; other cyclotomic numbers
// as {"conductor":N,"coords":[...]} in the canonical basis.
Json to_json(Cyclotomic const& c);
Cyclotomic cyclotomic_from_json(Json const& j);

// {"model":"R^2","grade":{...},"representative":["1/2","3"]}.
Json to_json(SpineElement const& s);
SpineElement spine_from_json(Json const& j);

// {"model":..., "parts":[{"grade":{...},"terms":[{"freq":[...],"coeff":{...}}]}]}
// with parts sorted by serialized grade and terms by frequency.
Json to_json(GradedElement const& u);
GradedElement graded_from_json(Json const& j);

// Parses text as JSON, mapping parse failures to SyntaxError.
Json parse_json(std::string_view text);

// The canonical text form: two-space indentation, sorted keys.
std::string dump(Json const& j);

}  // namespace spine
