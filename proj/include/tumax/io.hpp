#pragma once

#include <json.hpp>

#include "tumax/certify.hpp"
#include "tumax/compose.hpp"
#include "tumax/families.hpp"
#include "tumax/graphical.hpp"
#include "tumax/matrix.hpp"
#include "tumax/polytope.hpp"
#include "tumax/search.hpp"

namespace tumax {

using json = nlohmann::json;

// Matrices are arrays of rows.
json matrix_to_json(const IntMatrix& m);
// Throws UsageError on ragged or non-integer rows.
IntMatrix matrix_from_json(const json& j);
IntVector vector_from_json(const json& j, const char* what);

void to_json(json& j, const TuVerdict& v);
void to_json(json& j, const SumSpec& s);
SumSpec sum_spec_from_json(const json& j);
void to_json(json& j, const FactorCertificate& c);
void to_json(json& j, const BoundReport& r);
void to_json(json& j, const PatternReport& r);
void to_json(json& j, const NetworkBoundReport& r);
void to_json(json& j, const TransposeRowReport& r);
void to_json(json& j, const SweepSummary& s);
void to_json(json& j, const UnimodularPolytopeVerdict& v);
void to_json(json& j, const StandardForm& f);
void to_json(json& j, const PolytopeClass& c);
void to_json(json& j, const VertexBoundReport& r);
void to_json(json& j, const SearchResult& r);

}  // namespace tumax
