#include "abcu/oracle.hpp"

#include <algorithm>

#include "profile_scan.hpp"

namespace abcu {

namespace detail {

ProfileSpace ProfileSpace::make(const UncertaintyModel& model, const EnumerationLimits& limits,
                                const std::string& what) {
    require_valid(model);
    ProfileSpace space;
    space.instance_ = instance_of(model);
    space.size_ = plausible_profile_count(model);
    if (space.size_ > limits.max_profiles)
        throw ResourceLimitError(what + ": " + std::to_string(space.size_) +
                                     " plausible profiles exceed the cap of " +
                                     std::to_string(limits.max_profiles),
                                 space.size_, limits.max_profiles);

    if (const auto* joint = std::get_if<JointProbabilityModel>(&model)) {
        space.entries_ = &joint->entries;
        return space;
    }

    auto fill_axes = [&space](const LotteryModel& lottery) {
        space.axes_.reserve(lottery.voters.size());
        for (const auto& dist : lottery.voters) {
            Axis axis;
            axis.probability.reserve(dist.size());
            axis.set.reserve(dist.size());
            for (const auto& support : dist) {
                axis.probability.push_back(support.probability);
                axis.set.push_back(support.set);
            }
            space.axes_.push_back(std::move(axis));
        }
    };
    if (const auto* lottery = std::get_if<LotteryModel>(&model)) {
        fill_axes(*lottery);
    } else {
        fill_axes(cp_to_lottery(std::get<CandidateProbabilityModel>(model), limits));
    }
    return space;
}

bool run_parallel(Exec exec, std::uint64_t size) {
#ifdef _OPENMP
    if (exec == Exec::parallel) return true;
    if (exec == Exec::automatic) return size >= 4096 && omp_get_max_threads() > 1;
#else
    (void)exec;
    (void)size;
#endif
    return false;
}

}  // namespace detail

namespace oracle {

namespace {

struct MassAccumulator {
    std::vector<Rational> mass;
    std::vector<int> scratch;
};

// Pr[W is SWM] for each requested committee, in one scan.
std::vector<Rational> swm_mass(const detail::ProfileSpace& space,
                               const std::vector<CandidateSet>& committees, Exec exec) {
    const int k = space.instance().committee_size;
    auto make = [&] {
        MassAccumulator acc;
        acc.mass.assign(committees.size(), Rational(0));
        return acc;
    };
    auto body = [&](MassAccumulator& acc, const Rational& probability,
                    const std::vector<int>& scores) {
        acc.scratch.assign(scores.begin() + 1, scores.end());
        std::nth_element(acc.scratch.begin(), acc.scratch.begin() + (k - 1), acc.scratch.end(),
                         std::greater<int>());
        long best = 0;
        for (int j = 0; j < k; ++j) best += acc.scratch[static_cast<std::size_t>(j)];
        for (std::size_t w = 0; w < committees.size(); ++w) {
            long own = 0;
            for (int c : committees[w]) own += scores[static_cast<std::size_t>(c)];
            if (own == best) acc.mass[w] += probability;
        }
    };
    auto merge = [](MassAccumulator& total, MassAccumulator& part) {
        for (std::size_t i = 0; i < total.mass.size(); ++i) total.mass[i] += part.mass[i];
    };
    return detail::blocked_reduce<MassAccumulator>(space, exec, make, body, merge).mass;
}

}  // namespace

ProbResult swm_prob(const UncertaintyModel& model, const CandidateSet& committee,
                    const EnumerationLimits& limits, Exec exec) {
    auto space = detail::ProfileSpace::make(model, limits, "oracle swm_prob");
    validate_committee(space.instance(), committee);
    auto mass = swm_mass(space, {committee}, exec);
    return {mass.front(), {space.size(), 1}};
}

DistResult sw_dist(const UncertaintyModel& model, const CandidateSet& committee,
                   const EnumerationLimits& limits, Exec exec) {
    auto space = detail::ProfileSpace::make(model, limits, "oracle sw_dist");
    validate_committee(space.instance(), committee);

    const std::size_t width =
        static_cast<std::size_t>(space.instance().voters) * committee.size() + 1;
    auto make = [&] { return std::vector<Rational>(width, Rational(0)); };
    auto body = [&](std::vector<Rational>& acc, const Rational& probability,
                    const std::vector<int>& scores) {
        long sw = 0;
        for (int c : committee) sw += scores[static_cast<std::size_t>(c)];
        acc[static_cast<std::size_t>(sw)] += probability;
    };
    auto merge = [](std::vector<Rational>& total, std::vector<Rational>& part) {
        for (std::size_t i = 0; i < total.size(); ++i) total[i] += part[i];
    };
    auto probs = detail::blocked_reduce<std::vector<Rational>>(space, exec, make, body, merge);
    return {WelfareDistribution(0, std::move(probs)), {space.size(), 1}};
}

BoolResult is_poss_swm(const UncertaintyModel& model, const CandidateSet& committee,
                       const EnumerationLimits& limits, Exec exec) {
    auto result = swm_prob(model, committee, limits, exec);
    return {sgn(result.value) > 0, result.report};
}

BoolResult is_nec_swm(const UncertaintyModel& model, const CandidateSet& committee,
                      const EnumerationLimits& limits, Exec exec) {
    auto result = swm_prob(model, committee, limits, exec);
    return {result.value == 1, result.report};
}

AllResult swm_prob_all(const UncertaintyModel& model, const EnumerationLimits& limits,
                       Exec exec) {
    auto space = detail::ProfileSpace::make(model, limits, "oracle swm_prob_all");
    const Instance& inst = space.instance();
    std::uint64_t count = committee_count(inst.candidates, inst.committee_size);
    if (count > limits.max_committees)
        throw ResourceLimitError("oracle swm_prob_all: " + std::to_string(count) +
                                     " committees exceed the cap of " +
                                     std::to_string(limits.max_committees),
                                 count, limits.max_committees);
    AllResult result;
    result.committees = enumerate_committees(inst.candidates, inst.committee_size);
    result.probability = swm_mass(space, result.committees, exec);
    result.report = {space.size(), count};
    return result;
}

BestResult max_swm(const UncertaintyModel& model, const EnumerationLimits& limits, Exec exec) {
    auto all = swm_prob_all(model, limits, exec);
    std::size_t best = 0;
    for (std::size_t i = 1; i < all.committees.size(); ++i) {
        if (all.probability[i] > all.probability[best]) best = i;
    }
    return {all.committees[best], all.probability[best], all.report};
}

ProbResult robust_mass(const UncertaintyModel& model, const CandidateSet& committee,
                       const Rational& alpha, const EnumerationLimits& limits, Exec exec) {
    auto space = detail::ProfileSpace::make(model, limits, "robustness check");
    validate_committee(space.instance(), committee);
    const int k = space.instance().committee_size;

    auto make = [] { return MassAccumulator{{Rational(0)}, {}}; };
    auto body = [&](MassAccumulator& acc, const Rational& probability,
                    const std::vector<int>& scores) {
        acc.scratch.assign(scores.begin() + 1, scores.end());
        std::nth_element(acc.scratch.begin(), acc.scratch.begin() + (k - 1), acc.scratch.end(),
                         std::greater<int>());
        long best = 0;
        for (int j = 0; j < k; ++j) best += acc.scratch[static_cast<std::size_t>(j)];
        long own = 0;
        for (int c : committee) own += scores[static_cast<std::size_t>(c)];
        if (Rational(own) >= alpha * Rational(best)) acc.mass.front() += probability;
    };
    auto merge = [](MassAccumulator& total, MassAccumulator& part) {
        total.mass.front() += part.mass.front();
    };
    auto acc = detail::blocked_reduce<MassAccumulator>(space, exec, make, body, merge);
    return {acc.mass.front(), {space.size(), 1}};
}

}  // namespace oracle
}  // namespace abcu
