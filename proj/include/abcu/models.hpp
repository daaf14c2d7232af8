#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "abcu/rational.hpp"
#include "abcu/types.hpp"

namespace abcu {

// The four uncertain-preference models. 3VA is the candidate-probability
// model restricted to entries in {0, 1/2, 1}.

struct JointEntry {
    Rational probability;
    ApprovalProfile profile;
};

// Explicit distribution over whole approval profiles.
struct JointProbabilityModel {
    Instance instance;
    std::vector<JointEntry> entries;
};

struct LotterySupport {
    Rational probability;
    CandidateSet set;
};

// Independent per-voter distributions over approval sets.
struct LotteryModel {
    Instance instance;
    std::vector<std::vector<LotterySupport>> voters;  // one distribution per voter
};

// Independent per-(voter, candidate) approval probabilities.
struct CandidateProbabilityModel {
    Instance instance;
    std::vector<std::vector<Rational>> p;  // p[i][c-1] for voter i+1, candidate c
    bool three_valued = false;             // 3VA restriction requested

    const Rational& prob(int voter, int candidate) const {
        return p[static_cast<std::size_t>(voter - 1)][static_cast<std::size_t>(candidate - 1)];
    }
};

using UncertaintyModel =
    std::variant<JointProbabilityModel, LotteryModel, CandidateProbabilityModel>;

const Instance& instance_of(const UncertaintyModel& model);
std::string model_kind(const UncertaintyModel& model);  // joint | lottery | candidate_prob | 3va

// Caps for the inherently exponential paths. Exceeding one raises
// ResourceLimitError instead of silently truncating.
struct EnumerationLimits {
    std::uint64_t max_profiles = 1'000'000;
    int max_uncertain_per_voter = 20;
    std::uint64_t max_committees = 1'000'000;
};

// Structural checks. An empty result means every invariant holds; each
// violation names the offending voter, entry or cell.
std::vector<std::string> validate(const UncertaintyModel& model);
void require_valid(const UncertaintyModel& model);  // throws on the first violation

// Merge duplicate support sets per voter (summing probabilities). Files are
// canonicalized at parse time; direct constructions should call this too.
void canonicalize(LotteryModel& model);

// Number of plausible profiles, saturating at uint64 max.
std::uint64_t plausible_profile_count(const UncertaintyModel& model);

// The unique joint-model representation of a lottery model: one entry per
// combination of per-voter picks, probabilities multiplied.
JointProbabilityModel lottery_to_joint(const LotteryModel& model,
                                       const EnumerationLimits& limits = {});

// The unique lottery-model representation of a candidate-probability model:
// per voter, every approval set consistent with the certain entries.
LotteryModel cp_to_lottery(const CandidateProbabilityModel& model,
                           const EnumerationLimits& limits = {});

// Every plausible profile exactly once with its exact probability;
// probabilities sum to 1.
std::vector<std::pair<Rational, ApprovalProfile>> enumerate_plausible(
    const UncertaintyModel& model, const EnumerationLimits& limits = {});

// Deterministic exact sampling: inverse transform over exact cumulative
// rationals, drawing bits from a seeded mt19937_64. No ambient randomness.
ApprovalProfile sample(const UncertaintyModel& model, std::uint64_t seed);

}  // namespace abcu
