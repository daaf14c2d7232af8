#pragma once

#include <vector>

#include "abcu/core.hpp"
#include "abcu/models.hpp"

namespace abcu {

// Exact probability distribution of an integer-valued welfare quantity.
// Stored densely over [support_min, support_max]; queries outside the
// stored range return 0.
class WelfareDistribution {
public:
    WelfareDistribution() : offset_(0), probs_{Rational(1)} {}  // point mass at 0
    WelfareDistribution(int support_min, std::vector<Rational> probs);

    int support_min() const { return offset_; }
    int support_max() const { return offset_ + static_cast<int>(probs_.size()) - 1; }

    Rational at(int value) const;
    Rational cdf(int value) const;   // Pr[X <= value]
    Rational tail(int value) const;  // Pr[X >= value]
    Rational mean() const;
    Rational total() const;

    const std::vector<Rational>& probs() const { return probs_; }

    // Distributions compare as functions, so differently padded supports
    // with the same mass are equal.
    bool operator==(const WelfareDistribution& other) const;

private:
    void trim();

    int offset_;
    std::vector<Rational> probs_;
};

// Per-voter distribution of |W intersect A_i| in a lottery model:
// rows[i][j] = Pr[voter i+1 contributes j], each row summing to 1.
struct ContributionTable {
    std::vector<std::vector<Rational>> rows;  // n x (|W|+1)
};

ContributionTable contribution_table(const LotteryModel& model, const CandidateSet& committee);

// Distribution of the number of successes among independent Bernoulli
// trials with the given probabilities; result indexed 0..probs.size().
std::vector<Rational> poisson_binomial(const std::vector<Rational>& probs);

// Full distribution of SW(W). Joint models accumulate per entry; lottery
// models convolve the contribution table rows; candidate-probability models
// reduce to a Poisson binomial over the uncertain cells, shifted by the
// count of certain approvals.
WelfareDistribution sw_dist(const UncertaintyModel& model, const CandidateSet& committee);

// Distribution of AS(c): the welfare of the singleton committee {c}.
WelfareDistribution as_dist(const UncertaintyModel& model, int candidate);

// Pr[SW(W) >= tau].
Rational sw_tail(const UncertaintyModel& model, const CandidateSet& committee, int tau);

}  // namespace abcu
