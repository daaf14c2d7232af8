#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "abcu/models.hpp"
#include "abcu/oracle.hpp"
#include "abcu/swmprob.hpp"

namespace abcu {

struct RobustnessQuery {
    Rational alpha;  // in (0, 1]
    Rational beta;   // in (0, 1]
};

enum class OptMethod { expectation_topk, exhaustive, cp_single_voter_topk };

const char* to_string(OptMethod method);

struct OptimizationResult {
    CandidateSet committee;  // lexicographically least among the co-optima found
    Rational objective;
    std::vector<CandidateSet> co_optima;  // committees attaining the objective
    mpz_class co_optima_count = 1;        // exact count, even when the list is capped
    bool co_optima_complete = true;       // false when the list was capped or not searched
    OptMethod method = OptMethod::exhaustive;
};

// E[SW(W)], in closed form: no enumeration for any model.
Rational expected_sw(const UncertaintyModel& model, const CandidateSet& committee);

// E[AS(c)]; expected_sw is its sum over committee members.
Rational expected_approval_score(const UncertaintyModel& model, int candidate);

// Committee maximizing expected social welfare: the top-k candidates by
// expected approval score. All co-optima are reported (candidates tied at
// the threshold are interchangeable); the list is capped to keep highly
// symmetric instances representable, the exact count never is.
OptimizationResult max_exp_sw(const UncertaintyModel& model, std::uint64_t co_optima_cap = 10000);

// Committee maximizing Pr[W is SWM]. Candidate-probability models score
// every committee with the polynomial swm_prob (single-voter instances skip
// straight to the top-k approval probabilities); joint and lottery models
// are NP-hard and fall back to capped enumeration.
OptimizationResult max_swm(const UncertaintyModel& model, const EnumerationLimits& limits = {},
                           Exec exec = Exec::automatic);

struct RobustnessResult {
    bool robust = false;
    Rational probability;        // Pr[SW(W) >= alpha * SW(W*)]
    std::uint64_t profiles = 0;  // plausible profiles enumerated
};

// (alpha, beta)-robustness check. SW(W*) is a per-profile random variable,
// so this is inherently an enumeration over plausible profiles.
RobustnessResult robust_check(const UncertaintyModel& model, const CandidateSet& committee,
                              const RobustnessQuery& query, const EnumerationLimits& limits = {},
                              Exec exec = Exec::automatic);

struct UnrobustOutcome {
    std::optional<CandidateProbabilityModel> instance;
    Rational achievable;  // p + (1-p)^m, the exact robustness probability of every committee
};

// Single-voter family in which every size-1 committee reaches robustness
// probability exactly p + (1-p)^m, independent of alpha. When that value is
// below beta the returned instance admits no (alpha, beta)-robust committee
// for any alpha in (0, 1]; otherwise the outcome is infeasible and carries
// the achievable value.
UnrobustOutcome gen_unrobust_instance(int candidates, const Rational& p, const Rational& beta);

}  // namespace abcu
