#pragma once

#include <cstdint>
#include <string>

#include "abcu/distribution.hpp"
#include "abcu/models.hpp"
#include "abcu/oracle.hpp"

namespace abcu {

enum class SwmProbMethod { joint_sum, cp_decomposition, oracle_enumeration };

const char* to_string(SwmProbMethod method);

struct SwmProbReport {
    Rational probability;
    SwmProbMethod method = SwmProbMethod::joint_sum;
    std::uint64_t profiles = 0;  // profiles visited (joint sum / enumeration)
    std::uint64_t terms = 0;     // conditioning terms (cp decomposition)
};

// Pr[W is SWM]. Joint models sum indicator-weighted entry probabilities;
// candidate-probability models use the exact min/max decomposition over
// independent per-candidate score distributions; the lottery model is
// #P-complete and falls back to capped enumeration.
SwmProbReport swm_prob(const UncertaintyModel& model, const CandidateSet& committee,
                       const EnumerationLimits& limits = {});

}  // namespace abcu
