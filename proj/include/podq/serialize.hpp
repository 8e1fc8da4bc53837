#pragma once

#include <string>

#include "json.hpp"

#include "podq/bijection.hpp"
#include "podq/report.hpp"
#include "podq/series.hpp"

namespace podq {

using Json = nlohmann::ordered_json;

/// Partitions serialize as arrays of decimal strings; parsing also accepts plain integers.
Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

/// {"order": N, "coeffs": ["1", "0", ...]}; coefficients are decimal strings.
Json to_json(const Series& s);
Series series_from_json(const Json& j);

/// {"theorem", "input", "case", "mu", "alpha", "beta", "phi_beta", "output", "target"};
/// mu is null when the case builds no intermediate partition.
Json to_json(const MappingRecord& r);

Json to_json(const VerificationReport& r);

}  // namespace podq
