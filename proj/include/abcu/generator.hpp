#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "abcu/models.hpp"

namespace abcu {

// Seeded random instance generation. Output is deterministic per seed and
// always passes validate().
struct GeneratorConfig {
    std::string kind = "lottery";  // joint | lottery | candidate_prob | 3va
    Instance instance{3, 3, 2};
    std::uint64_t seed = 0;

    int lottery_supports = 3;  // max support sets per voter
    int joint_entries = 4;     // max joint entries

    // Menu the candidate-probability cells are drawn from; 3va instances
    // always use {0, 1/2, 1}.
    std::vector<Rational> menu;

    // Cap on uncertain cells (0 < p < 1) per cp/3va instance; negative
    // means unrestricted. Keeps the enumeration cross-checks tractable.
    int max_uncertain_cells = -1;
};

std::vector<Rational> default_probability_menu();  // {0, 1/4, 1/2, 3/4, 1}

UncertaintyModel gen_random(const GeneratorConfig& config);

}  // namespace abcu
