#pragma once

#include <string>

#include <json.hpp>

#include "rirobust/game.hpp"
#include "rirobust/vanishing.hpp"

namespace rir::io {

using Json = nlohmann::ordered_json;

/// Reads and parses a JSON file. Throws FileNotFound or SchemaViolation.
Json load_json(const std::string& path);

/// "a,b|s1" for the given profile and state.
std::string cell_key(const BaseGame& g, std::size_t profile, std::size_t theta);

BaseGame game_from_json(const Json& j);
Json game_to_json(const BaseGame& g);

/// Reads the "outcome" object; absent cells are zero.
Outcome outcome_from_json(const BaseGame& g, const Json& j);
/// Cell map with "num/den" strings, listing only nonzero cells.
Json outcome_to_json(const BaseGame& g, const Outcome& p);

Json partition_to_json(const BaseGame& g, const PartitionProfile& part);
PartitionProfile partition_from_json(const BaseGame& g, const Json& j);

Json certificate_to_json(const BaseGame& g, const VceCertificate& c);
VceCertificate certificate_from_json(const BaseGame& g, const Json& j);

Json rational(const Rational& q);
Rational rational_from_json(const Json& j, const std::string& where);

}  // namespace rir::io
