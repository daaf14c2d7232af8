#pragma once

#include <string>

#include "abcu/models.hpp"

namespace abcu {

// Canonical instance files: one JSON document per instance with fields
// model ("joint" | "lottery" | "candidate_prob" | "3va"), n, m, k and the
// model payload. Probabilities are strings ("0.35" and "7/20" parse to the
// same exact rational) or JSON integers; JSON floats are rejected because
// they are not exact.
UncertaintyModel parse_instance(const std::string& text);
UncertaintyModel load_instance(const std::string& path);

// Canonical serialization: probabilities as lowest-term fractions, sets
// sorted, duplicate lottery supports merged. parse(serialize(x)) == x for
// canonicalized instances.
std::string serialize_instance(const UncertaintyModel& model);
void save_instance(const UncertaintyModel& model, const std::string& path);

}  // namespace abcu
