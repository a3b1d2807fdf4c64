#pragma once

#include <json.hpp>

#include "mwp/analysis.hpp"
#include "mwp/deltagraph.hpp"
#include "mwp/matrix.hpp"

namespace mwp {

using Json = nlohmann::ordered_json;

Json to_json(const Monomial& m);
Json to_json(const Polynomial& p);
Json to_json(const PolyMatrix& m);
Json to_json(const CoeffMatrix& m);
Json delta_graph_json(const DeltaGraph& g, const ChoiceDomains& domains);

Polynomial polynomial_from_json(const Json& j);

}  // namespace mwp
