#include "abcu/core.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "abcu/errors.hpp"

namespace abcu {

int social_welfare(const Instance& inst, const CandidateSet& committee,
                   const ApprovalProfile& profile) {
    validate_instance(inst);
    validate_committee(inst, committee);
    validate_profile(inst, profile);
    int total = 0;
    for (const auto& approvals : profile) total += committee.intersection_size(approvals);
    return total;
}

int approval_score(const Instance& inst, int candidate, const ApprovalProfile& profile) {
    validate_instance(inst);
    validate_candidate(inst, candidate);
    validate_profile(inst, profile);
    int score = 0;
    for (const auto& approvals : profile) score += approvals.contains(candidate) ? 1 : 0;
    return score;
}

std::vector<int> approval_scores(const Instance& inst, const ApprovalProfile& profile) {
    std::vector<int> scores(static_cast<std::size_t>(inst.candidates) + 1, 0);
    for (const auto& approvals : profile) {
        for (int c : approvals) ++scores[static_cast<std::size_t>(c)];
    }
    return scores;
}

long top_k_score_sum(const std::vector<int>& scores, int k) {
    std::vector<int> sorted(scores.begin() + 1, scores.end());
    std::partial_sort(sorted.begin(), sorted.begin() + k, sorted.end(), std::greater<int>());
    return std::accumulate(sorted.begin(), sorted.begin() + k, 0L);
}

bool is_swm(const Instance& inst, const CandidateSet& committee, const ApprovalProfile& profile) {
    validate_instance(inst);
    validate_committee(inst, committee);
    validate_profile(inst, profile);
    auto scores = approval_scores(inst, profile);
    long own = 0;
    for (int c : committee) own += scores[static_cast<std::size_t>(c)];
    return own == top_k_score_sum(scores, inst.committee_size);
}

CandidateSet greedy_swm(const Instance& inst, const ApprovalProfile& profile, int k) {
    validate_instance(inst);
    validate_profile(inst, profile);
    if (k < 1 || k > inst.candidates)
        throw ValidationError("committee size must satisfy 1 <= k <= m");
    auto scores = approval_scores(inst, profile);
    std::vector<int> order(static_cast<std::size_t>(inst.candidates));
    std::iota(order.begin(), order.end(), 1);
    std::stable_sort(order.begin(), order.end(), [&scores](int a, int b) {
        return scores[static_cast<std::size_t>(a)] > scores[static_cast<std::size_t>(b)];
    });
    order.resize(static_cast<std::size_t>(k));
    return CandidateSet(order);
}

namespace {

void combinations(int m, int k, int next, std::vector<int>& current,
                  std::vector<CandidateSet>& out) {
    if (static_cast<int>(current.size()) == k) {
        out.emplace_back(current);
        return;
    }
    int needed = k - static_cast<int>(current.size());
    for (int c = next; c <= m - needed + 1; ++c) {
        current.push_back(c);
        combinations(m, k, c + 1, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<CandidateSet> enumerate_committees(int m, int k) {
    std::vector<CandidateSet> out;
    std::vector<int> current;
    combinations(m, k, 1, current, out);
    return out;
}

std::uint64_t committee_count(int m, int k) {
    if (k < 0 || k > m) return 0;
    const std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t result = 1;
    k = std::min(k, m - k);
    for (int i = 1; i <= k; ++i) {
        std::uint64_t factor = static_cast<std::uint64_t>(m - k + i);
        if (result > kMax / factor) return kMax;
        result = result * factor / static_cast<std::uint64_t>(i);
    }
    return result;
}

}  // namespace abcu
