#pragma once

#include <optional>
#include <vector>

#include "abcu/models.hpp"
#include "abcu/oracle.hpp"

namespace abcu {

// Verdict for the ordered pair (ci, cj): does AS(ci) >= AS(cj) hold in every
// plausible profile? `tie_equal` means the scores agree everywhere, which
// the dominance graph resolves with a lexicographic edge; `incomparable`
// means ci does not weakly dominate cj (the reverse direction is a separate
// query).
enum class Dominance { strict_or_equal, incomparable, tie_equal };

// The deterministic realization that most favors `rival` against `anchor`:
// per voter, supports are preferred in the order rival-only, both, neither,
// anchor-only (first support in input order within a class). If anchor still
// scores at least rival here, it does so in every plausible profile.
ApprovalProfile adversarial_profile(const LotteryModel& model, int anchor, int rival);

Dominance dominates(const LotteryModel& model, int ci, int cj);

// Acyclic digraph with edge (ci, cj) when AS(ci) >= AS(cj) in every
// plausible profile; everywhere-equal pairs carry only the min->max edge.
struct DominanceGraph {
    int candidates = 0;
    std::vector<std::vector<bool>> edge;  // 1-based on both sides

    bool has_edge(int from, int to) const {
        return edge[static_cast<std::size_t>(from)][static_cast<std::size_t>(to)];
    }
};

DominanceGraph build_dominance_graph(const LotteryModel& model);

// SWM with positive probability. Polynomial for joint and candidate
// probability models; the lottery model falls back to capped enumeration
// (the problem is NP-complete there).
bool is_poss_swm(const UncertaintyModel& model, const CandidateSet& committee,
                 const EnumerationLimits& limits = {});

// SWM with probability 1. Polynomial for all models.
bool is_nec_swm(const UncertaintyModel& model, const CandidateSet& committee);

// A necessarily-SWM committee when one exists. Polynomial for all models.
std::optional<CandidateSet> exists_nec_swm(const UncertaintyModel& model);

}  // namespace abcu
