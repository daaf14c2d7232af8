#pragma once

#include <cstdint>
#include <vector>

#include "abcu/distribution.hpp"
#include "abcu/models.hpp"

namespace abcu {

// Execution policy for the enumeration kernels. Exact arithmetic makes the
// reduction order irrelevant, so serial and parallel runs return identical
// values; `automatic` parallelizes once the profile space is large enough.
enum class Exec { automatic, serial, parallel };

// Brute-force reference implementations: every quantity is computed by
// exhaustively enumerating plausible profiles (and committees where the
// question ranges over committees). These are the ground truth the
// polynomial-time paths are tested against, and the only honest solvers for
// the problems with hardness results.
namespace oracle {

struct Report {
    std::uint64_t profiles = 0;
    std::uint64_t committees = 0;
};

struct ProbResult {
    Rational value;
    Report report;
};

struct BoolResult {
    bool value = false;
    Report report;
};

struct DistResult {
    WelfareDistribution value;
    Report report;
};

struct BestResult {
    CandidateSet committee;
    Rational probability;
    Report report;
};

struct AllResult {
    std::vector<CandidateSet> committees;  // lexicographic order
    std::vector<Rational> probability;     // Pr[committees[i] is SWM]
    Report report;
};

ProbResult swm_prob(const UncertaintyModel& model, const CandidateSet& committee,
                    const EnumerationLimits& limits = {}, Exec exec = Exec::automatic);

DistResult sw_dist(const UncertaintyModel& model, const CandidateSet& committee,
                   const EnumerationLimits& limits = {}, Exec exec = Exec::automatic);

BoolResult is_poss_swm(const UncertaintyModel& model, const CandidateSet& committee,
                       const EnumerationLimits& limits = {}, Exec exec = Exec::automatic);

BoolResult is_nec_swm(const UncertaintyModel& model, const CandidateSet& committee,
                      const EnumerationLimits& limits = {}, Exec exec = Exec::automatic);

// Pr[W is SWM] for every size-k committee in one scan.
AllResult swm_prob_all(const UncertaintyModel& model, const EnumerationLimits& limits = {},
                       Exec exec = Exec::automatic);

// Committee maximizing Pr[W is SWM]; ties resolved lexicographically.
BestResult max_swm(const UncertaintyModel& model, const EnumerationLimits& limits = {},
                   Exec exec = Exec::automatic);

// Pr[SW(W) >= alpha * SW(W*)], the robustness mass of Definition-style
// queries; W* is the per-profile optimum, so this is enumeration-only.
ProbResult robust_mass(const UncertaintyModel& model, const CandidateSet& committee,
                       const Rational& alpha, const EnumerationLimits& limits = {},
                       Exec exec = Exec::automatic);

}  // namespace oracle
}  // namespace abcu
