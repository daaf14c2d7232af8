#pragma once

#include <cstdint>
#include <vector>

#include "abcu/types.hpp"

namespace abcu {

// Deterministic approval-voting primitives. Social welfare of a committee W
// under a profile is sum_i |W intersect A_i|; a committee is social-welfare
// maximizing (SWM) when no committee of the same size beats it, with weak
// ties counting as maximizing.

int social_welfare(const Instance& inst, const CandidateSet& committee,
                   const ApprovalProfile& profile);

int approval_score(const Instance& inst, int candidate, const ApprovalProfile& profile);

// Scores for all candidates; entry 0 is unused so scores[c] matches candidate c.
std::vector<int> approval_scores(const Instance& inst, const ApprovalProfile& profile);

// Sum of the k largest entries among scores[1..m]: the best achievable welfare.
long top_k_score_sum(const std::vector<int>& scores, int k);

bool is_swm(const Instance& inst, const CandidateSet& committee, const ApprovalProfile& profile);

// The k highest-scored candidates, ties resolved toward the smallest index.
CandidateSet greedy_swm(const Instance& inst, const ApprovalProfile& profile, int k);

// All size-k subsets of 1..m in lexicographic order of their member lists.
std::vector<CandidateSet> enumerate_committees(int m, int k);

// C(m, k), saturating at uint64 max.
std::uint64_t committee_count(int m, int k);

}  // namespace abcu
