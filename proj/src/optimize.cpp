#include "abcu/optimize.hpp"

#include <algorithm>
#include <numeric>

#include "abcu/core.hpp"
#include "abcu/errors.hpp"

namespace abcu {

const char* to_string(OptMethod method) {
    switch (method) {
        case OptMethod::expectation_topk: return "expectation-topk";
        case OptMethod::exhaustive: return "exhaustive";
        case OptMethod::cp_single_voter_topk: return "cp-n1-topk";
    }
    return "?";
}

Rational expected_approval_score(const UncertaintyModel& model, int candidate) {
    require_valid(model);
    validate_candidate(instance_of(model), candidate);

    if (const auto* joint = std::get_if<JointProbabilityModel>(&model)) {
        Rational out(0);
        for (const auto& entry : joint->entries) {
            int score = 0;
            for (const auto& approvals : entry.profile)
                score += approvals.contains(candidate) ? 1 : 0;
            out += entry.probability * Rational(score);
        }
        return out;
    }
    if (const auto* lottery = std::get_if<LotteryModel>(&model)) {
        Rational out(0);
        for (const auto& dist : lottery->voters) {
            for (const auto& support : dist) {
                if (support.set.contains(candidate)) out += support.probability;
            }
        }
        return out;
    }
    const auto& cp = std::get<CandidateProbabilityModel>(model);
    Rational out(0);
    for (int i = 1; i <= cp.instance.voters; ++i) out += cp.prob(i, candidate);
    return out;
}

Rational expected_sw(const UncertaintyModel& model, const CandidateSet& committee) {
    require_valid(model);
    validate_committee(instance_of(model), committee);
    Rational out(0);
    for (int c : committee) out += expected_approval_score(model, c);
    return out;
}

namespace {

void combinations_into(const std::vector<int>& pool, std::size_t start, int take, std::size_t cap,
                       std::vector<int>& current, const std::vector<int>& fixed,
                       std::vector<CandidateSet>& out, bool& complete) {
    if (out.size() >= cap) {
        complete = false;
        return;
    }
    if (take == 0) {
        std::vector<int> members = fixed;
        members.insert(members.end(), current.begin(), current.end());
        out.emplace_back(std::move(members));
        return;
    }
    for (std::size_t i = start; i + static_cast<std::size_t>(take) <= pool.size(); ++i) {
        current.push_back(pool[i]);
        combinations_into(pool, i + 1, take - 1, cap, current, fixed, out, complete);
        current.pop_back();
        if (!complete) return;
    }
}

}  // namespace

OptimizationResult max_exp_sw(const UncertaintyModel& model, std::uint64_t co_optima_cap) {
    require_valid(model);
    const Instance& inst = instance_of(model);
    const int k = inst.committee_size;

    std::vector<Rational> score(static_cast<std::size_t>(inst.candidates) + 1);
    for (int c = 1; c <= inst.candidates; ++c)
        score[static_cast<std::size_t>(c)] = expected_approval_score(model, c);

    std::vector<int> order(static_cast<std::size_t>(inst.candidates));
    std::iota(order.begin(), order.end(), 1);
    std::stable_sort(order.begin(), order.end(), [&score](int a, int b) {
        return score[static_cast<std::size_t>(a)] > score[static_cast<std::size_t>(b)];
    });

    OptimizationResult result;
    result.method = OptMethod::expectation_topk;
    result.committee = CandidateSet(std::vector<int>(order.begin(), order.begin() + k));
    result.objective = Rational(0);
    for (int c : result.committee) result.objective += score[static_cast<std::size_t>(c)];

    // Every co-optimum consists of the candidates strictly above the k-th
    // score plus any fill from the candidates tied at it.
    const Rational& threshold = score[static_cast<std::size_t>(order[static_cast<std::size_t>(k - 1)])];
    std::vector<int> above;
    std::vector<int> tied;
    for (int c = 1; c <= inst.candidates; ++c) {
        if (score[static_cast<std::size_t>(c)] > threshold)
            above.push_back(c);
        else if (score[static_cast<std::size_t>(c)] == threshold)
            tied.push_back(c);
    }
    const int slots = k - static_cast<int>(above.size());
    mpz_bin_uiui(result.co_optima_count.get_mpz_t(), tied.size(),
                 static_cast<unsigned long>(slots));

    bool complete = true;
    std::vector<int> current;
    combinations_into(tied, 0, slots, static_cast<std::size_t>(co_optima_cap), current, above,
                      result.co_optima, complete);
    result.co_optima_complete = complete;
    std::sort(result.co_optima.begin(), result.co_optima.end());
    return result;
}

namespace {

OptimizationResult max_swm_cp(const CandidateProbabilityModel& model,
                              const EnumerationLimits& limits) {
    const Instance& inst = model.instance;
    const UncertaintyModel wrapped(model);

    if (inst.voters == 1) {
        // Single voter: the top-k approval probabilities maximize both
        // products in the two-case decomposition, no enumeration needed.
        std::vector<int> order(static_cast<std::size_t>(inst.candidates));
        std::iota(order.begin(), order.end(), 1);
        std::stable_sort(order.begin(), order.end(),
                         [&model](int a, int b) { return model.prob(1, a) > model.prob(1, b); });
        order.resize(static_cast<std::size_t>(inst.committee_size));

        OptimizationResult result;
        result.method = OptMethod::cp_single_voter_topk;
        result.committee = CandidateSet(std::move(order));
        result.objective = swm_prob(wrapped, result.committee, limits).probability;
        result.co_optima = {result.committee};
        result.co_optima_complete = false;  // ties with other committees not searched
        return result;
    }

    std::uint64_t count = committee_count(inst.candidates, inst.committee_size);
    if (count > limits.max_committees)
        throw ResourceLimitError("max_swm: " + std::to_string(count) +
                                     " committees exceed the cap of " +
                                     std::to_string(limits.max_committees),
                                 count, limits.max_committees);

    OptimizationResult result;
    result.method = OptMethod::exhaustive;
    bool first = true;
    for (const auto& committee : enumerate_committees(inst.candidates, inst.committee_size)) {
        Rational probability = swm_prob(wrapped, committee, limits).probability;
        if (first || probability > result.objective) {
            result.committee = committee;
            result.objective = probability;
            result.co_optima = {committee};
            first = false;
        } else if (probability == result.objective) {
            result.co_optima.push_back(committee);
        }
    }
    result.co_optima_count = result.co_optima.size();
    return result;
}

}  // namespace

OptimizationResult max_swm(const UncertaintyModel& model, const EnumerationLimits& limits,
                           Exec exec) {
    require_valid(model);
    if (const auto* cp = std::get_if<CandidateProbabilityModel>(&model))
        return max_swm_cp(*cp, limits);

    // Joint and lottery models: NP-hard, so only the capped exhaustive path.
    std::uint64_t profiles = plausible_profile_count(model);
    if (profiles > limits.max_profiles)
        throw ResourceLimitError(
            "max_swm has no polynomial path for the " + model_kind(model) +
                " model (the problem is NP-hard); enumerating " + std::to_string(profiles) +
                " plausible profiles exceeds the cap of " + std::to_string(limits.max_profiles),
            profiles, limits.max_profiles);

    auto all = oracle::swm_prob_all(model, limits, exec);
    OptimizationResult result;
    result.method = OptMethod::exhaustive;
    std::size_t best = 0;
    for (std::size_t i = 1; i < all.committees.size(); ++i)
        if (all.probability[i] > all.probability[best]) best = i;
    result.committee = all.committees[best];
    result.objective = all.probability[best];
    for (std::size_t i = 0; i < all.committees.size(); ++i)
        if (all.probability[i] == result.objective) result.co_optima.push_back(all.committees[i]);
    result.co_optima_count = result.co_optima.size();
    return result;
}

RobustnessResult robust_check(const UncertaintyModel& model, const CandidateSet& committee,
                              const RobustnessQuery& query, const EnumerationLimits& limits,
                              Exec exec) {
    if (sgn(query.alpha) <= 0 || query.alpha > 1)
        throw ValidationError("alpha must lie in (0, 1]");
    if (sgn(query.beta) <= 0 || query.beta > 1) throw ValidationError("beta must lie in (0, 1]");
    auto mass = oracle::robust_mass(model, committee, query.alpha, limits, exec);
    return {mass.value >= query.beta, mass.value, mass.report.profiles};
}

UnrobustOutcome gen_unrobust_instance(int candidates, const Rational& p, const Rational& beta) {
    if (candidates < 1) throw ValidationError("candidate count must be positive");
    if (!is_probability(p)) throw ValidationError("p must lie in [0, 1]");
    if (sgn(beta) <= 0 || beta > 1) throw ValidationError("beta must lie in (0, 1]");

    UnrobustOutcome outcome;
    outcome.achievable =
        p + rational_pow(Rational(1) - p, static_cast<unsigned long>(candidates));
    if (outcome.achievable >= beta) return outcome;

    const Rational half(1, 2);
    CandidateProbabilityModel model;
    model.instance = {1, candidates, 1};
    model.p.assign(1, std::vector<Rational>(static_cast<std::size_t>(candidates), p));
    model.three_valued = (p == 0 || p == 1 || p == half);
    outcome.instance = std::move(model);
    return outcome;
}

}  // namespace abcu
