#include "abcu/swmprob.hpp"

#include "abcu/core.hpp"
#include "abcu/errors.hpp"

namespace abcu {

const char* to_string(SwmProbMethod method) {
    switch (method) {
        case SwmProbMethod::joint_sum: return "joint-sum";
        case SwmProbMethod::cp_decomposition: return "cp-decomposition";
        case SwmProbMethod::oracle_enumeration: return "oracle-enumeration";
    }
    return "?";
}

namespace {

// Pr[max outside <= min inside], conditioned on the minimum inside score.
// Approval scores of distinct candidates are independent here, so both the
// minimum and the outside maximum factor into products of per-candidate
// tail/cdf terms.
SwmProbReport swm_prob_cp(const CandidateProbabilityModel& model, const CandidateSet& committee) {
    const auto& inst = model.instance;
    const int n = inst.voters;
    const UncertaintyModel as_model(model);

    // tails[c][t] = Pr[AS(c) >= t]; cdf derived as 1 - tails[c][t+1].
    std::vector<std::vector<Rational>> tails(static_cast<std::size_t>(inst.candidates) + 1);
    for (int c = 1; c <= inst.candidates; ++c) {
        auto dist = as_dist(as_model, c);
        auto& tail = tails[static_cast<std::size_t>(c)];
        tail.assign(static_cast<std::size_t>(n) + 2, Rational(0));
        Rational running(0);
        for (int t = n; t >= 0; --t) {
            running += dist.at(t);
            tail[static_cast<std::size_t>(t)] = running;
        }
    }

    Rational total(0);
    for (int t = 0; t <= n; ++t) {
        Rational min_at_least_t(1);
        Rational min_at_least_next(1);
        for (int c : committee) {
            min_at_least_t *= tails[static_cast<std::size_t>(c)][static_cast<std::size_t>(t)];
            min_at_least_next *=
                tails[static_cast<std::size_t>(c)][static_cast<std::size_t>(t) + 1];
        }
        Rational min_exactly_t = min_at_least_t - min_at_least_next;
        if (min_exactly_t == 0) continue;

        Rational outside_at_most_t(1);
        for (int c = 1; c <= inst.candidates; ++c) {
            if (committee.contains(c)) continue;
            outside_at_most_t *=
                Rational(1) - tails[static_cast<std::size_t>(c)][static_cast<std::size_t>(t) + 1];
        }
        total += min_exactly_t * outside_at_most_t;
    }

    SwmProbReport report;
    report.probability = total;
    report.method = SwmProbMethod::cp_decomposition;
    report.terms = static_cast<std::uint64_t>(n) + 1;
    return report;
}

}  // namespace

SwmProbReport swm_prob(const UncertaintyModel& model, const CandidateSet& committee,
                       const EnumerationLimits& limits) {
    require_valid(model);
    validate_committee(instance_of(model), committee);

    if (const auto* joint = std::get_if<JointProbabilityModel>(&model)) {
        SwmProbReport report;
        report.probability = Rational(0);
        for (const auto& entry : joint->entries) {
            if (is_swm(joint->instance, committee, entry.profile))
                report.probability += entry.probability;
        }
        report.method = SwmProbMethod::joint_sum;
        report.profiles = joint->entries.size();
        return report;
    }
    if (const auto* cp = std::get_if<CandidateProbabilityModel>(&model))
        return swm_prob_cp(*cp, committee);

    // Lottery: #P-complete, so only the capped exhaustive path exists.
    std::uint64_t count = plausible_profile_count(model);
    if (count > limits.max_profiles)
        throw ResourceLimitError(
            "lottery swm_prob has no polynomial path (the problem is #P-complete); "
            "enumerating " +
                std::to_string(count) + " plausible profiles exceeds the cap of " +
                std::to_string(limits.max_profiles),
            count, limits.max_profiles);
    auto result = oracle::swm_prob(model, committee, limits);
    SwmProbReport report;
    report.probability = result.value;
    report.method = SwmProbMethod::oracle_enumeration;
    report.profiles = result.report.profiles;
    return report;
}

}  // namespace abcu
