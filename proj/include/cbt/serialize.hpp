#pragma once

#include <json.hpp>

#include "cbt/fock.hpp"
#include "cbt/laurent.hpp"
#include "cbt/partition.hpp"

namespace cbt {

using ordered_json = nlohmann::ordered_json;

// {"-1": 1, "0": 3} for v^-1 + 3. Exponents ascend.
ordered_json poly_to_json(const LaurentPoly& p);
// Accepts integer or decimal-string coefficients.
LaurentPoly poly_from_json(const nlohmann::ordered_json& j);

// [20, 10]
ordered_json partition_to_json(const Partition& p);
Partition partition_from_json(const nlohmann::ordered_json& j);

// Object keyed by the comma-separated diagram, descending lexicographically:
// {"2": {"0": 1}, "1,1": {"1": 1}}
ordered_json fock_to_json(const FockVector& x);
FockVector fock_from_json(const nlohmann::ordered_json& j, Context ctx);

}  // namespace cbt
