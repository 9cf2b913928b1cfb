#pragma once

#include <string>
#include <vector>

#include "json_out.hpp"
#include "tgraph/tgraph.hpp"

namespace tgraph::cli {

inline constexpr const char* kSchemaId = "tgraph-output/1";

Json to_json(const Params& p);
Json to_json(const BoundState& s);
Json to_json(const Observables& o);
Json to_json(const VerifyReport& r);
Json to_json(const std::vector<Extremum>& ex);
Json to_json(const std::vector<Intersection>& xs);
Json to_json(const GridReport& r);
Json to_json(const ProbeReport& r);

}  // namespace tgraph::cli
