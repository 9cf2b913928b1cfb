#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

namespace tgraph::cli {

using Json = nlohmann::ordered_json;

// Doubles as "%.17g" so output is byte-stable and round-trips; keys keep insertion order.
std::string dump_json(const Json& j);
std::string fmt17(double v);

}  // namespace tgraph::cli
