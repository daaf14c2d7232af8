#include "abcu/models.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <random>

#include "abcu/errors.hpp"

namespace abcu {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t mul_sat(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a > kSaturated / b) return kSaturated;
    return a * b;
}

void check_profile_cap(std::uint64_t count, const EnumerationLimits& limits,
                       const std::string& what) {
    if (count > limits.max_profiles)
        throw ResourceLimitError(what + ": " +
                                     (count == kSaturated ? std::string("more than 2^64")
                                                          : std::to_string(count)) +
                                     " plausible profiles exceed the cap of " +
                                     std::to_string(limits.max_profiles),
                                 count, limits.max_profiles);
}

}  // namespace

const Instance& instance_of(const UncertaintyModel& model) {
    return std::visit([](const auto& m) -> const Instance& { return m.instance; }, model);
}

std::string model_kind(const UncertaintyModel& model) {
    if (std::holds_alternative<JointProbabilityModel>(model)) return "joint";
    if (std::holds_alternative<LotteryModel>(model)) return "lottery";
    return std::get<CandidateProbabilityModel>(model).three_valued ? "3va" : "candidate_prob";
}

namespace {

void validate_instance_into(const Instance& inst, std::vector<std::string>& out) {
    if (inst.voters < 1) out.push_back("voter count must be positive");
    if (inst.candidates < 1) out.push_back("candidate count must be positive");
    if (inst.committee_size < 1 || inst.committee_size > inst.candidates)
        out.push_back("committee size must satisfy 1 <= k <= m");
}

bool set_in_range(const CandidateSet& set, int m) {
    return set.empty() || (*set.begin() >= 1 && *std::prev(set.end()) <= m);
}

std::vector<std::string> validate_joint(const JointProbabilityModel& model) {
    std::vector<std::string> out;
    validate_instance_into(model.instance, out);
    if (model.entries.empty()) {
        out.push_back("joint model has no entries");
        return out;
    }
    Rational total(0);
    std::map<ApprovalProfile, std::size_t> seen;
    for (std::size_t r = 0; r < model.entries.size(); ++r) {
        const auto& entry = model.entries[r];
        std::string where = "entry " + std::to_string(r + 1);
        if (sgn(entry.probability) <= 0)
            out.push_back(where + " probability " + to_fraction_string(entry.probability) +
                          " must be positive");
        if (static_cast<int>(entry.profile.size()) != model.instance.voters) {
            out.push_back(where + " profile has " + std::to_string(entry.profile.size()) +
                          " approval sets, expected " + std::to_string(model.instance.voters));
        } else {
            for (std::size_t i = 0; i < entry.profile.size(); ++i) {
                if (!set_in_range(entry.profile[i], model.instance.candidates))
                    out.push_back(where + " voter " + std::to_string(i + 1) +
                                  " approves a candidate out of range");
            }
        }
        auto [it, inserted] = seen.emplace(entry.profile, r);
        if (!inserted)
            out.push_back("entries " + std::to_string(it->second + 1) + " and " +
                          std::to_string(r + 1) + " repeat the same profile");
        total += entry.probability;
    }
    if (total != 1)
        out.push_back("entry probabilities sum to " + to_fraction_string(total) + ", expected 1");
    return out;
}

std::vector<std::string> validate_lottery(const LotteryModel& model) {
    std::vector<std::string> out;
    validate_instance_into(model.instance, out);
    if (static_cast<int>(model.voters.size()) != model.instance.voters) {
        out.push_back("lottery model has " + std::to_string(model.voters.size()) +
                      " voter distributions, expected " + std::to_string(model.instance.voters));
        return out;
    }
    for (std::size_t i = 0; i < model.voters.size(); ++i) {
        const auto& dist = model.voters[i];
        std::string who = "voter " + std::to_string(i + 1);
        if (dist.empty()) {
            out.push_back(who + " has no support sets");
            continue;
        }
        Rational total(0);
        std::map<CandidateSet, std::size_t> seen;
        for (std::size_t r = 0; r < dist.size(); ++r) {
            if (sgn(dist[r].probability) <= 0)
                out.push_back(who + " support " + std::to_string(r + 1) + " probability " +
                              to_fraction_string(dist[r].probability) + " must be positive");
            if (!set_in_range(dist[r].set, model.instance.candidates))
                out.push_back(who + " support " + std::to_string(r + 1) +
                              " contains a candidate out of range");
            auto [it, inserted] = seen.emplace(dist[r].set, r);
            if (!inserted)
                out.push_back(who + " repeats support set " + dist[r].set.to_string());
            total += dist[r].probability;
        }
        if (total != 1)
            out.push_back(who + " distribution sums to " + to_fraction_string(total));
    }
    return out;
}

std::vector<std::string> validate_cp(const CandidateProbabilityModel& model) {
    std::vector<std::string> out;
    validate_instance_into(model.instance, out);
    if (static_cast<int>(model.p.size()) != model.instance.voters) {
        out.push_back("probability matrix has " + std::to_string(model.p.size()) +
                      " rows, expected " + std::to_string(model.instance.voters));
        return out;
    }
    const Rational half(1, 2);
    for (std::size_t i = 0; i < model.p.size(); ++i) {
        if (static_cast<int>(model.p[i].size()) != model.instance.candidates) {
            out.push_back("voter " + std::to_string(i + 1) + " row has " +
                          std::to_string(model.p[i].size()) + " entries, expected " +
                          std::to_string(model.instance.candidates));
            continue;
        }
        for (std::size_t c = 0; c < model.p[i].size(); ++c) {
            const Rational& v = model.p[i][c];
            std::string where =
                "voter " + std::to_string(i + 1) + " candidate " + std::to_string(c + 1);
            if (!is_probability(v)) {
                out.push_back(where + " probability " + to_fraction_string(v) + " out of range");
            } else if (model.three_valued && v != 0 && v != 1 && v != half) {
                out.push_back(where + " probability " + to_fraction_string(v) +
                              " not in {0, 1/2, 1}");
            }
        }
    }
    return out;
}

}  // namespace

std::vector<std::string> validate(const UncertaintyModel& model) {
    return std::visit(
        [](const auto& m) {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, JointProbabilityModel>) return validate_joint(m);
            if constexpr (std::is_same_v<T, LotteryModel>) return validate_lottery(m);
            if constexpr (std::is_same_v<T, CandidateProbabilityModel>) return validate_cp(m);
        },
        model);
}

void require_valid(const UncertaintyModel& model) {
    auto violations = validate(model);
    if (!violations.empty()) throw ValidationError(violations.front());
}

void canonicalize(LotteryModel& model) {
    for (auto& dist : model.voters) {
        std::map<CandidateSet, Rational> merged;
        for (auto& support : dist) merged[support.set] += support.probability;
        dist.clear();
        for (auto& [set, probability] : merged) dist.push_back({probability, set});
    }
}

std::uint64_t plausible_profile_count(const UncertaintyModel& model) {
    if (const auto* joint = std::get_if<JointProbabilityModel>(&model))
        return joint->entries.size();
    if (const auto* lottery = std::get_if<LotteryModel>(&model)) {
        std::uint64_t total = 1;
        for (const auto& dist : lottery->voters) total = mul_sat(total, dist.size());
        return total;
    }
    const auto& cp = std::get<CandidateProbabilityModel>(model);
    std::uint64_t total = 1;
    for (const auto& row : cp.p) {
        std::uint64_t uncertain = 0;
        for (const auto& v : row) uncertain += (sgn(v) > 0 && v < 1) ? 1 : 0;
        for (std::uint64_t b = 0; b < uncertain; ++b) total = mul_sat(total, 2);
    }
    return total;
}

JointProbabilityModel lottery_to_joint(const LotteryModel& model,
                                       const EnumerationLimits& limits) {
    require_valid(UncertaintyModel(model));
    std::uint64_t count = plausible_profile_count(UncertaintyModel(model));
    check_profile_cap(count, limits, "lottery_to_joint");

    JointProbabilityModel joint{model.instance, {}};
    joint.entries.reserve(static_cast<std::size_t>(count));

    const int n = model.instance.voters;
    std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
    while (true) {
        Rational probability(1);
        ApprovalProfile profile;
        profile.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            const auto& support = model.voters[static_cast<std::size_t>(i)][pick[static_cast<std::size_t>(i)]];
            probability *= support.probability;
            profile.push_back(support.set);
        }
        joint.entries.push_back({std::move(probability), std::move(profile)});

        int axis = n - 1;
        while (axis >= 0) {
            auto a = static_cast<std::size_t>(axis);
            if (++pick[a] < model.voters[a].size()) break;
            pick[a] = 0;
            --axis;
        }
        if (axis < 0) break;
    }
    return joint;
}

LotteryModel cp_to_lottery(const CandidateProbabilityModel& model,
                           const EnumerationLimits& limits) {
    require_valid(UncertaintyModel(model));
    LotteryModel lottery{model.instance, {}};
    lottery.voters.resize(static_cast<std::size_t>(model.instance.voters));

    for (int i = 1; i <= model.instance.voters; ++i) {
        std::vector<int> certain;
        std::vector<int> uncertain;
        for (int c = 1; c <= model.instance.candidates; ++c) {
            const Rational& v = model.prob(i, c);
            if (v == 1)
                certain.push_back(c);
            else if (sgn(v) > 0)
                uncertain.push_back(c);
        }
        if (static_cast<int>(uncertain.size()) > limits.max_uncertain_per_voter)
            throw ResourceLimitError(
                "cp_to_lottery: voter " + std::to_string(i) + " has " +
                    std::to_string(uncertain.size()) + " uncertain entries, cap is " +
                    std::to_string(limits.max_uncertain_per_voter),
                uncertain.size(), static_cast<std::uint64_t>(limits.max_uncertain_per_voter));

        auto& dist = lottery.voters[static_cast<std::size_t>(i - 1)];
        const std::size_t subsets = std::size_t{1} << uncertain.size();
        dist.reserve(subsets);
        for (std::size_t mask = 0; mask < subsets; ++mask) {
            Rational probability(1);
            std::vector<int> members = certain;
            for (std::size_t b = 0; b < uncertain.size(); ++b) {
                const Rational& v = model.prob(i, uncertain[b]);
                if (mask & (std::size_t{1} << b)) {
                    probability *= v;
                    members.push_back(uncertain[b]);
                } else {
                    probability *= Rational(1) - v;
                }
            }
            dist.push_back({std::move(probability), CandidateSet(std::move(members))});
        }
    }
    return lottery;
}

std::vector<std::pair<Rational, ApprovalProfile>> enumerate_plausible(
    const UncertaintyModel& model, const EnumerationLimits& limits) {
    require_valid(model);
    check_profile_cap(plausible_profile_count(model), limits, "enumerate_plausible");

    if (const auto* joint = std::get_if<JointProbabilityModel>(&model)) {
        std::vector<std::pair<Rational, ApprovalProfile>> out;
        out.reserve(joint->entries.size());
        for (const auto& entry : joint->entries) out.emplace_back(entry.probability, entry.profile);
        return out;
    }
    const LotteryModel lottery = std::holds_alternative<LotteryModel>(model)
                                     ? std::get<LotteryModel>(model)
                                     : cp_to_lottery(std::get<CandidateProbabilityModel>(model), limits);
    auto joint = lottery_to_joint(lottery, limits);
    std::vector<std::pair<Rational, ApprovalProfile>> out;
    out.reserve(joint.entries.size());
    for (auto& entry : joint.entries)
        out.emplace_back(std::move(entry.probability), std::move(entry.profile));
    return out;
}

namespace {

// Exact inverse-transform sampling. The uniform draw is refined bit by bit:
// the interval [x/2^B, (x+1)/2^B) narrows until it sits inside one segment
// of the cumulative distribution, so every comparison is exact.
class BitSource {
public:
    explicit BitSource(std::uint64_t seed) : rng_(seed) {}

    int next_bit() {
        if (left_ == 0) {
            buffer_ = rng_();
            left_ = 64;
        }
        int bit = static_cast<int>(buffer_ & 1);
        buffer_ >>= 1;
        --left_;
        return bit;
    }

private:
    std::mt19937_64 rng_;
    std::uint64_t buffer_ = 0;
    int left_ = 0;
};

std::size_t sample_index(const std::vector<Rational>& probabilities, BitSource& bits) {
    if (probabilities.size() == 1) return 0;
    std::vector<Rational> cumulative;
    cumulative.reserve(probabilities.size());
    Rational running(0);
    for (const auto& p : probabilities) {
        running += p;
        cumulative.push_back(running);
    }

    mpz_class x(0);
    mpz_class pow2(1);
    while (true) {
        // Interval is [x/pow2, (x+1)/pow2); find a segment containing it.
        Rational lo_prev(0);
        for (std::size_t j = 0; j < cumulative.size(); ++j) {
            const Rational& hi = cumulative[j];
            // x/pow2 >= lo_prev  and  (x+1)/pow2 <= hi
            bool above = x * lo_prev.get_den() >= lo_prev.get_num() * pow2;
            bool below = (x + 1) * hi.get_den() <= hi.get_num() * pow2;
            if (above && below) return j;
            lo_prev = hi;
        }
        x = 2 * x + bits.next_bit();
        pow2 *= 2;
    }
}

}  // namespace

ApprovalProfile sample(const UncertaintyModel& model, std::uint64_t seed) {
    require_valid(model);
    BitSource bits(seed);

    if (const auto* joint = std::get_if<JointProbabilityModel>(&model)) {
        std::vector<Rational> probabilities;
        probabilities.reserve(joint->entries.size());
        for (const auto& entry : joint->entries) probabilities.push_back(entry.probability);
        return joint->entries[sample_index(probabilities, bits)].profile;
    }
    if (const auto* lottery = std::get_if<LotteryModel>(&model)) {
        ApprovalProfile profile;
        profile.reserve(lottery->voters.size());
        for (const auto& dist : lottery->voters) {
            std::vector<Rational> probabilities;
            probabilities.reserve(dist.size());
            for (const auto& support : dist) probabilities.push_back(support.probability);
            profile.push_back(dist[sample_index(probabilities, bits)].set);
        }
        return profile;
    }
    const auto& cp = std::get<CandidateProbabilityModel>(model);
    ApprovalProfile profile;
    profile.reserve(cp.p.size());
    for (int i = 1; i <= cp.instance.voters; ++i) {
        std::vector<int> members;
        for (int c = 1; c <= cp.instance.candidates; ++c) {
            const Rational& v = cp.prob(i, c);
            if (v == 1) {
                members.push_back(c);
            } else if (sgn(v) > 0) {
                std::vector<Rational> probabilities{v, Rational(1) - v};
                if (sample_index(probabilities, bits) == 0) members.push_back(c);
            }
        }
        profile.push_back(CandidateSet(std::move(members)));
    }
    return profile;
}

}  // namespace abcu
