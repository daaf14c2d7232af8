#include "abcu/distribution.hpp"

#include <algorithm>

#include "abcu/errors.hpp"

namespace abcu {

WelfareDistribution::WelfareDistribution(int support_min, std::vector<Rational> probs)
    : offset_(support_min), probs_(std::move(probs)) {
    if (probs_.empty()) probs_.push_back(Rational(0));
    trim();
}

void WelfareDistribution::trim() {
    std::size_t first = 0;
    while (first + 1 < probs_.size() && probs_[first] == 0) ++first;
    std::size_t last = probs_.size();
    while (last > first + 1 && probs_[last - 1] == 0) --last;
    if (first > 0 || last < probs_.size()) {
        probs_ = std::vector<Rational>(probs_.begin() + static_cast<std::ptrdiff_t>(first),
                                       probs_.begin() + static_cast<std::ptrdiff_t>(last));
        offset_ += static_cast<int>(first);
    }
}

Rational WelfareDistribution::at(int value) const {
    if (value < support_min() || value > support_max()) return Rational(0);
    return probs_[static_cast<std::size_t>(value - offset_)];
}

Rational WelfareDistribution::cdf(int value) const {
    Rational out(0);
    for (int v = support_min(); v <= std::min(value, support_max()); ++v) out += at(v);
    return out;
}

Rational WelfareDistribution::tail(int value) const {
    Rational out(0);
    for (int v = std::max(value, support_min()); v <= support_max(); ++v) out += at(v);
    return out;
}

Rational WelfareDistribution::mean() const {
    Rational out(0);
    for (int v = support_min(); v <= support_max(); ++v) out += Rational(v) * at(v);
    return out;
}

Rational WelfareDistribution::total() const {
    Rational out(0);
    for (const auto& p : probs_) out += p;
    return out;
}

bool WelfareDistribution::operator==(const WelfareDistribution& other) const {
    int lo = std::min(support_min(), other.support_min());
    int hi = std::max(support_max(), other.support_max());
    for (int v = lo; v <= hi; ++v) {
        if (at(v) != other.at(v)) return false;
    }
    return true;
}

ContributionTable contribution_table(const LotteryModel& model, const CandidateSet& committee) {
    const std::size_t width = committee.size() + 1;
    ContributionTable table;
    table.rows.reserve(model.voters.size());
    for (const auto& dist : model.voters) {
        std::vector<Rational> row(width, Rational(0));
        for (const auto& support : dist)
            row[static_cast<std::size_t>(committee.intersection_size(support.set))] +=
                support.probability;
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::vector<Rational> poisson_binomial(const std::vector<Rational>& probs) {
    std::vector<Rational> dp{Rational(1)};
    dp.reserve(probs.size() + 1);
    for (const auto& p : probs) {
        std::vector<Rational> next(dp.size() + 1, Rational(0));
        const Rational q = Rational(1) - p;
        for (std::size_t j = 0; j < dp.size(); ++j) {
            if (dp[j] == 0) continue;
            next[j] += q * dp[j];
            next[j + 1] += p * dp[j];
        }
        dp = std::move(next);
    }
    return dp;
}

namespace {

// Distribution of sum_i |S intersect A_i| for an arbitrary candidate set S
// (committee-size validation happens in the public entry points, so the
// same machinery serves both sw_dist and as_dist).
WelfareDistribution sw_dist_any(const UncertaintyModel& model, const CandidateSet& set) {
    if (const auto* joint = std::get_if<JointProbabilityModel>(&model)) {
        const int max_sw = joint->instance.voters * static_cast<int>(set.size());
        std::vector<Rational> probs(static_cast<std::size_t>(max_sw) + 1, Rational(0));
        for (const auto& entry : joint->entries) {
            int sw = 0;
            for (const auto& approvals : entry.profile) sw += set.intersection_size(approvals);
            probs[static_cast<std::size_t>(sw)] += entry.probability;
        }
        return WelfareDistribution(0, std::move(probs));
    }

    if (const auto* lottery = std::get_if<LotteryModel>(&model)) {
        auto table = contribution_table(*lottery, set);
        std::vector<Rational> dp = table.rows.front();
        for (std::size_t i = 1; i < table.rows.size(); ++i) {
            const auto& row = table.rows[i];
            std::vector<Rational> next(dp.size() + row.size() - 1, Rational(0));
            for (std::size_t t = 0; t < dp.size(); ++t) {
                if (dp[t] == 0) continue;
                for (std::size_t j = 0; j < row.size(); ++j) {
                    if (row[j] == 0) continue;
                    next[t + j] += dp[t] * row[j];
                }
            }
            dp = std::move(next);
        }
        return WelfareDistribution(0, std::move(dp));
    }

    // Candidate probability: certain approvals shift, certain disapprovals
    // drop out, and the uncertain cells form a Poisson binomial.
    const auto& cp = std::get<CandidateProbabilityModel>(model);
    int certain = 0;
    std::vector<Rational> uncertain;
    for (int i = 1; i <= cp.instance.voters; ++i) {
        for (int c : set) {
            const Rational& v = cp.prob(i, c);
            if (v == 1)
                ++certain;
            else if (sgn(v) > 0)
                uncertain.push_back(v);
        }
    }
    return WelfareDistribution(certain, poisson_binomial(uncertain));
}

}  // namespace

WelfareDistribution sw_dist(const UncertaintyModel& model, const CandidateSet& committee) {
    require_valid(model);
    validate_committee(instance_of(model), committee);
    return sw_dist_any(model, committee);
}

WelfareDistribution as_dist(const UncertaintyModel& model, int candidate) {
    require_valid(model);
    validate_candidate(instance_of(model), candidate);
    return sw_dist_any(model, CandidateSet::singleton(candidate));
}

Rational sw_tail(const UncertaintyModel& model, const CandidateSet& committee, int tau) {
    return sw_dist(model, committee).tail(tau);
}

}  // namespace abcu
