#pragma once

// Shared fixtures: the three worked instances that anchor the golden tests,
// plus small builders used across the suites.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "abcu/generator.hpp"
#include "abcu/models.hpp"

namespace abcu::testing {

inline CandidateSet set(std::vector<int> members) { return CandidateSet(std::move(members)); }

inline ApprovalProfile profile(std::vector<std::vector<int>> sets) {
    ApprovalProfile out;
    out.reserve(sets.size());
    for (auto& s : sets) out.push_back(CandidateSet(std::move(s)));
    return out;
}

inline Rational rat(const std::string& text) { return parse_rational(text); }

// Three voters, three candidates, k = 2. Table-backed welfare distribution
// for W = {2,3}: contributions (0, .3, .7), (0, 1, 0), (.5, .1, .4).
inline LotteryModel lottery_worked_example() {
    LotteryModel model;
    model.instance = {3, 3, 2};
    model.voters = {
        {{rat("0.3"), set({1, 2})}, {rat("0.5"), set({2, 3})}, {rat("0.2"), set({1, 2, 3})}},
        {{rat("0.4"), set({1, 2})}, {rat("0.6"), set({3})}},
        {{rat("0.5"), set({1})}, {rat("0.1"), set({1, 3})}, {rat("0.4"), set({2, 3})}},
    };
    return model;
}

// Two voters, two candidates, k = 2: rows (1, 0.5), (0.6, 0.8);
// Pr[SW({1,2}) = 3] = 23/50.
inline CandidateProbabilityModel cp_worked_example() {
    CandidateProbabilityModel model;
    model.instance = {2, 2, 2};
    model.p = {{rat("1"), rat("0.5")}, {rat("0.6"), rat("0.8")}};
    return model;
}

// Three voters, four candidates, k = 2; the 3VA instance whose committee
// {3,4} uniquely maximizes Pr[SWM] at 19/32 while three committees tie on
// expected welfare. Candidates 1 and 2 read (1, 1/2, 0), candidate 3 is
// (1, 1, 0) and candidate 4 is the fully unknown column.
inline CandidateProbabilityModel tva_worked_example() {
    CandidateProbabilityModel model;
    model.instance = {3, 4, 2};
    model.p = {
        {rat("1"), rat("1"), rat("1"), rat("1/2")},
        {rat("1/2"), rat("1/2"), rat("1"), rat("1/2")},
        {rat("0"), rat("0"), rat("0"), rat("1/2")},
    };
    model.three_valued = true;
    return model;
}

// Seeded small instances for the oracle-equivalence suites: n, m <= 5,
// random k, lottery supports <= 3, candidate probabilities from the menu
// {0, 1/4, 1/2, 3/4, 1} with a budget on uncertain cells so exhaustive
// enumeration stays cheap.
inline UncertaintyModel random_suite_instance(const std::string& kind, std::uint64_t seed) {
    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + 1);
    auto below = [&rng](std::uint64_t bound) { return rng() % bound; };

    GeneratorConfig config;
    config.kind = kind;
    config.seed = seed;
    config.instance.voters = 1 + static_cast<int>(below(5));
    config.instance.candidates = 1 + static_cast<int>(below(5));
    config.instance.committee_size =
        1 + static_cast<int>(below(static_cast<std::uint64_t>(config.instance.candidates)));
    config.lottery_supports = 3;
    config.joint_entries = 6;
    config.max_uncertain_cells = 10;
    return gen_random(config);
}

}  // namespace abcu::testing
