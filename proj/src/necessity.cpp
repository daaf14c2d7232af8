#include "abcu/necessity.hpp"

#include <algorithm>
#include <numeric>

#include "abcu/core.hpp"
#include "abcu/errors.hpp"

namespace abcu {

namespace {

// rival-only < both < neither < anchor-only
int case_rank(const CandidateSet& set, int anchor, int rival) {
    bool has_anchor = set.contains(anchor);
    bool has_rival = set.contains(rival);
    if (has_rival && !has_anchor) return 0;
    if (has_rival && has_anchor) return 1;
    if (!has_rival && !has_anchor) return 2;
    return 3;
}

}  // namespace

ApprovalProfile adversarial_profile(const LotteryModel& model, int anchor, int rival) {
    validate_candidate(model.instance, anchor);
    validate_candidate(model.instance, rival);
    ApprovalProfile profile;
    profile.reserve(model.voters.size());
    for (const auto& dist : model.voters) {
        const CandidateSet* chosen = nullptr;
        int best = 4;
        for (const auto& support : dist) {
            int rank = case_rank(support.set, anchor, rival);
            if (rank < best) {
                best = rank;
                chosen = &support.set;
                if (rank == 0) break;
            }
        }
        profile.push_back(*chosen);
    }
    return profile;
}

Dominance dominates(const LotteryModel& model, int ci, int cj) {
    if (ci == cj) throw ValidationError("dominance query needs two distinct candidates");
    auto worst_for_i = adversarial_profile(model, ci, cj);
    auto worst_for_j = adversarial_profile(model, cj, ci);
    auto scores_i = approval_scores(model.instance, worst_for_i);
    auto scores_j = approval_scores(model.instance, worst_for_j);
    bool i_dominates =
        scores_i[static_cast<std::size_t>(ci)] >= scores_i[static_cast<std::size_t>(cj)];
    bool j_dominates =
        scores_j[static_cast<std::size_t>(cj)] >= scores_j[static_cast<std::size_t>(ci)];
    if (i_dominates && j_dominates) return Dominance::tie_equal;
    if (i_dominates) return Dominance::strict_or_equal;
    return Dominance::incomparable;
}

DominanceGraph build_dominance_graph(const LotteryModel& model) {
    const int m = model.instance.candidates;
    const int pairs = m * (m - 1) / 2;

    // 0: no edge, 1: i -> j, 2: j -> i. Pairs are independent; the plain
    // array keeps the parallel writes race-free (vector<bool> would not).
    std::vector<signed char> verdict(static_cast<std::size_t>(pairs), 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int pair = 0; pair < pairs; ++pair) {
        // Unrank: pair -> (i, j) with 1 <= i < j <= m.
        int i = 1;
        int before = 0;
        while (before + (m - i) <= pair) {
            before += m - i;
            ++i;
        }
        int j = i + 1 + (pair - before);
        // Ties carry only the lexicographic min -> max edge.
        if (dominates(model, i, j) != Dominance::incomparable) {
            verdict[static_cast<std::size_t>(pair)] = 1;
        } else if (dominates(model, j, i) == Dominance::strict_or_equal) {
            verdict[static_cast<std::size_t>(pair)] = 2;
        }
    }

    DominanceGraph graph;
    graph.candidates = m;
    graph.edge.assign(static_cast<std::size_t>(m) + 1,
                      std::vector<bool>(static_cast<std::size_t>(m) + 1, false));
    int pair = 0;
    for (int i = 1; i <= m; ++i) {
        for (int j = i + 1; j <= m; ++j, ++pair) {
            if (verdict[static_cast<std::size_t>(pair)] == 1)
                graph.edge[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
            else if (verdict[static_cast<std::size_t>(pair)] == 2)
                graph.edge[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = true;
        }
    }
    return graph;
}

namespace {

bool is_poss_swm_cp(const CandidateProbabilityModel& model, const CandidateSet& committee) {
    // A_i = {c in W : p > 0} union {c outside W : p = 1}: every approval that
    // can help W does, every approval that can be withheld from rivals is.
    ApprovalProfile profile;
    profile.reserve(static_cast<std::size_t>(model.instance.voters));
    for (int i = 1; i <= model.instance.voters; ++i) {
        std::vector<int> members;
        for (int c = 1; c <= model.instance.candidates; ++c) {
            const Rational& v = model.prob(i, c);
            if (committee.contains(c) ? sgn(v) > 0 : v == 1) members.push_back(c);
        }
        profile.push_back(CandidateSet(std::move(members)));
    }
    return is_swm(model.instance, committee, profile);
}

bool is_nec_swm_cp(const CandidateProbabilityModel& model, const CandidateSet& committee) {
    // The mirror construction: only certain approvals count for W, every
    // positive-probability approval counts for its rivals.
    ApprovalProfile profile;
    profile.reserve(static_cast<std::size_t>(model.instance.voters));
    for (int i = 1; i <= model.instance.voters; ++i) {
        std::vector<int> members;
        for (int c = 1; c <= model.instance.candidates; ++c) {
            const Rational& v = model.prob(i, c);
            if (committee.contains(c) ? v == 1 : sgn(v) > 0) members.push_back(c);
        }
        profile.push_back(CandidateSet(std::move(members)));
    }
    return is_swm(model.instance, committee, profile);
}

bool is_nec_swm_lottery(const LotteryModel& model, const CandidateSet& committee) {
    const auto& inst = model.instance;
    for (int inside : committee) {
        for (int outside = 1; outside <= inst.candidates; ++outside) {
            if (committee.contains(outside)) continue;
            auto profile = adversarial_profile(model, inside, outside);
            auto scores = approval_scores(inst, profile);
            if (scores[static_cast<std::size_t>(inside)] <
                scores[static_cast<std::size_t>(outside)])
                return false;
        }
    }
    return true;
}

std::optional<CandidateSet> exists_nec_swm_joint(const JointProbabilityModel& model) {
    const auto& inst = model.instance;
    const auto m = static_cast<std::size_t>(inst.candidates);
    std::vector<bool> survivor(m + 1, true);  // AS >= k-th highest in every entry
    std::vector<bool> forced(m + 1, false);   // AS > k-th highest in some entry
    for (const auto& entry : model.entries) {
        auto scores = approval_scores(inst, entry.profile);
        std::vector<int> sorted(scores.begin() + 1, scores.end());
        std::nth_element(sorted.begin(), sorted.begin() + (inst.committee_size - 1), sorted.end(),
                         std::greater<int>());
        int threshold = sorted[static_cast<std::size_t>(inst.committee_size - 1)];
        for (std::size_t c = 1; c <= m; ++c) {
            if (scores[c] < threshold) survivor[c] = false;
            if (scores[c] > threshold) forced[c] = true;
        }
    }

    std::vector<int> members;
    for (std::size_t c = 1; c <= m; ++c) {
        if (forced[c]) {
            if (!survivor[c]) return std::nullopt;
            members.push_back(static_cast<int>(c));
        }
    }
    if (static_cast<int>(members.size()) > inst.committee_size) return std::nullopt;
    for (std::size_t c = 1; c <= m && static_cast<int>(members.size()) < inst.committee_size;
         ++c) {
        if (survivor[c] && !forced[c]) members.push_back(static_cast<int>(c));
    }
    if (static_cast<int>(members.size()) < inst.committee_size) return std::nullopt;

    CandidateSet committee(std::move(members));
    if (!is_nec_swm(UncertaintyModel(model), committee)) return std::nullopt;
    return committee;
}

std::optional<CandidateSet> exists_nec_swm_lottery(const LotteryModel& model) {
    const auto& inst = model.instance;
    auto graph = build_dominance_graph(model);

    // Peel zero-indegree candidates k times (smallest index first), then
    // accept only if every selected candidate dominates every rejected one.
    const auto m = static_cast<std::size_t>(inst.candidates);
    std::vector<bool> selected(m + 1, false);
    std::vector<int> indegree(m + 1, 0);
    for (std::size_t i = 1; i <= m; ++i)
        for (std::size_t j = 1; j <= m; ++j)
            if (graph.edge[i][j]) ++indegree[j];

    std::vector<int> members;
    for (int round = 0; round < inst.committee_size; ++round) {
        int chosen = 0;
        for (std::size_t c = 1; c <= m; ++c) {
            if (!selected[c] && indegree[c] == 0) {
                chosen = static_cast<int>(c);
                break;
            }
        }
        selected[static_cast<std::size_t>(chosen)] = true;
        members.push_back(chosen);
        for (std::size_t j = 1; j <= m; ++j)
            if (graph.edge[static_cast<std::size_t>(chosen)][j]) --indegree[j];
    }

    for (std::size_t c = 1; c <= m; ++c) {
        if (selected[c]) continue;
        for (int member : members) {
            if (!graph.has_edge(member, static_cast<int>(c))) return std::nullopt;
        }
    }
    return CandidateSet(std::move(members));
}

std::optional<CandidateSet> exists_nec_swm_cp(const CandidateProbabilityModel& model) {
    const auto& inst = model.instance;
    // Rank by certain approvals, break ties by positive-probability
    // approvals, then by index.
    std::vector<int> certain(static_cast<std::size_t>(inst.candidates) + 1, 0);
    std::vector<int> positive(static_cast<std::size_t>(inst.candidates) + 1, 0);
    for (int i = 1; i <= inst.voters; ++i) {
        for (int c = 1; c <= inst.candidates; ++c) {
            const Rational& v = model.prob(i, c);
            if (v == 1) ++certain[static_cast<std::size_t>(c)];
            if (sgn(v) > 0) ++positive[static_cast<std::size_t>(c)];
        }
    }
    std::vector<int> order(static_cast<std::size_t>(inst.candidates));
    std::iota(order.begin(), order.end(), 1);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        auto sa = static_cast<std::size_t>(a);
        auto sb = static_cast<std::size_t>(b);
        if (certain[sa] != certain[sb]) return certain[sa] > certain[sb];
        if (positive[sa] != positive[sb]) return positive[sa] > positive[sb];
        return a < b;
    });
    order.resize(static_cast<std::size_t>(inst.committee_size));
    CandidateSet committee(std::move(order));
    if (!is_nec_swm(UncertaintyModel(model), committee)) return std::nullopt;
    return committee;
}

}  // namespace

bool is_poss_swm(const UncertaintyModel& model, const CandidateSet& committee,
                 const EnumerationLimits& limits) {
    require_valid(model);
    validate_committee(instance_of(model), committee);

    if (const auto* joint = std::get_if<JointProbabilityModel>(&model)) {
        for (const auto& entry : joint->entries) {
            if (is_swm(joint->instance, committee, entry.profile)) return true;
        }
        return false;
    }
    if (const auto* cp = std::get_if<CandidateProbabilityModel>(&model))
        return is_poss_swm_cp(*cp, committee);

    // Lottery: NP-complete, so only the capped exhaustive path exists.
    std::uint64_t count = plausible_profile_count(model);
    if (count > limits.max_profiles)
        throw ResourceLimitError(
            "lottery is_poss_swm has no polynomial path (the problem is NP-complete); "
            "enumerating " +
                std::to_string(count) + " plausible profiles exceeds the cap of " +
                std::to_string(limits.max_profiles),
            count, limits.max_profiles);
    return oracle::is_poss_swm(model, committee, limits).value;
}

bool is_nec_swm(const UncertaintyModel& model, const CandidateSet& committee) {
    require_valid(model);
    validate_committee(instance_of(model), committee);

    if (const auto* joint = std::get_if<JointProbabilityModel>(&model)) {
        for (const auto& entry : joint->entries) {
            if (!is_swm(joint->instance, committee, entry.profile)) return false;
        }
        return true;
    }
    if (const auto* lottery = std::get_if<LotteryModel>(&model))
        return is_nec_swm_lottery(*lottery, committee);
    return is_nec_swm_cp(std::get<CandidateProbabilityModel>(model), committee);
}

std::optional<CandidateSet> exists_nec_swm(const UncertaintyModel& model) {
    require_valid(model);
    if (const auto* joint = std::get_if<JointProbabilityModel>(&model))
        return exists_nec_swm_joint(*joint);
    if (const auto* lottery = std::get_if<LotteryModel>(&model))
        return exists_nec_swm_lottery(*lottery);
    return exists_nec_swm_cp(std::get<CandidateProbabilityModel>(model));
}

}  // namespace abcu
