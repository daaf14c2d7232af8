#include "abcu/generator.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "abcu/errors.hpp"

namespace abcu {

std::vector<Rational> default_probability_menu() {
    return {Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)};
}

namespace {

std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
    // Rejection sampling keeps the draw unbiased and the stream stable.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t draw;
    do {
        draw = rng();
    } while (draw >= limit);
    return draw % bound;
}

CandidateSet random_set(std::mt19937_64& rng, int m) {
    std::vector<int> members;
    for (int c = 1; c <= m; ++c) {
        if (below(rng, 2) == 1) members.push_back(c);
    }
    return CandidateSet(std::move(members));
}

// Positive weights normalized by their sum: exact probabilities adding to 1.
std::vector<Rational> random_distribution(std::mt19937_64& rng, std::size_t count) {
    std::vector<long> weights(count);
    long total = 0;
    for (auto& w : weights) {
        w = 1 + static_cast<long>(below(rng, 8));
        total += w;
    }
    std::vector<Rational> probabilities;
    probabilities.reserve(count);
    for (long w : weights) {
        Rational p(w, total);
        p.canonicalize();  // mpq_class(num, den) does not reduce on its own
        probabilities.push_back(std::move(p));
    }
    return probabilities;
}

LotteryModel gen_lottery(const GeneratorConfig& config, std::mt19937_64& rng) {
    LotteryModel model{config.instance, {}};
    const int m = config.instance.candidates;
    for (int i = 0; i < config.instance.voters; ++i) {
        std::uint64_t max_distinct = m >= 20 ? std::numeric_limits<std::uint64_t>::max()
                                             : (std::uint64_t{1} << m);
        std::uint64_t supports =
            std::min<std::uint64_t>(1 + below(rng, static_cast<std::uint64_t>(config.lottery_supports)),
                                    max_distinct);
        std::set<CandidateSet> sets;
        while (sets.size() < supports) sets.insert(random_set(rng, m));
        auto probabilities = random_distribution(rng, sets.size());
        std::vector<LotterySupport> dist;
        std::size_t index = 0;
        for (const auto& set : sets) dist.push_back({probabilities[index++], set});
        model.voters.push_back(std::move(dist));
    }
    return model;
}

JointProbabilityModel gen_joint(const GeneratorConfig& config, std::mt19937_64& rng) {
    JointProbabilityModel model{config.instance, {}};
    const int n = config.instance.voters;
    const int m = config.instance.candidates;
    std::uint64_t entries = 1 + below(rng, static_cast<std::uint64_t>(config.joint_entries));
    std::set<ApprovalProfile> profiles;
    std::uint64_t attempts = 0;
    while (profiles.size() < entries && attempts < 64 * entries) {
        ApprovalProfile profile;
        for (int i = 0; i < n; ++i) profile.push_back(random_set(rng, m));
        profiles.insert(std::move(profile));
        ++attempts;
    }
    auto probabilities = random_distribution(rng, profiles.size());
    std::size_t index = 0;
    for (const auto& profile : profiles) model.entries.push_back({probabilities[index++], profile});
    return model;
}

CandidateProbabilityModel gen_cp(const GeneratorConfig& config, std::mt19937_64& rng,
                                 bool three_valued) {
    std::vector<Rational> menu = three_valued
                                     ? std::vector<Rational>{Rational(0), Rational(1, 2), Rational(1)}
                                     : (config.menu.empty() ? default_probability_menu() : config.menu);
    std::vector<Rational> certain;
    std::vector<Rational> uncertain;
    for (const auto& v : menu) {
        if (!is_probability(v)) throw ValidationError("menu value out of [0, 1]");
        (sgn(v) > 0 && v < 1 ? uncertain : certain).push_back(v);
    }

    const int n = config.instance.voters;
    const int m = config.instance.candidates;
    CandidateProbabilityModel model;
    model.instance = config.instance;
    model.three_valued = three_valued;
    model.p.assign(static_cast<std::size_t>(n),
                   std::vector<Rational>(static_cast<std::size_t>(m), Rational(0)));

    if (config.max_uncertain_cells < 0) {
        for (auto& row : model.p)
            for (auto& cell : row) cell = menu[below(rng, menu.size())];
        return model;
    }

    // Budgeted uncertainty: draw certain values everywhere, then flip a
    // random subset of cells to uncertain menu values.
    for (auto& row : model.p)
        for (auto& cell : row)
            cell = certain.empty() ? Rational(0) : certain[below(rng, certain.size())];
    if (uncertain.empty()) return model;

    const std::uint64_t cells = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(m);
    std::uint64_t budget =
        below(rng, std::min<std::uint64_t>(static_cast<std::uint64_t>(config.max_uncertain_cells),
                                           cells) +
                       1);
    std::vector<std::uint64_t> positions(cells);
    std::iota(positions.begin(), positions.end(), 0);
    for (std::uint64_t picked = 0; picked < budget; ++picked) {
        std::uint64_t swap_with = picked + below(rng, cells - picked);
        std::swap(positions[picked], positions[swap_with]);
        std::uint64_t pos = positions[picked];
        model.p[pos / static_cast<std::uint64_t>(m)][pos % static_cast<std::uint64_t>(m)] =
            uncertain[below(rng, uncertain.size())];
    }
    return model;
}

}  // namespace

UncertaintyModel gen_random(const GeneratorConfig& config) {
    validate_instance(config.instance);
    if (config.lottery_supports < 1) throw ValidationError("lottery support bound must be positive");
    if (config.joint_entries < 1) throw ValidationError("joint entry bound must be positive");

    std::mt19937_64 rng(config.seed);
    UncertaintyModel model = [&]() -> UncertaintyModel {
        if (config.kind == "lottery") return gen_lottery(config, rng);
        if (config.kind == "joint") return gen_joint(config, rng);
        if (config.kind == "candidate_prob") return gen_cp(config, rng, false);
        if (config.kind == "3va") return gen_cp(config, rng, true);
        throw ValidationError("unknown model kind '" + config.kind + "'");
    }();
    require_valid(model);
    return model;
}

}  // namespace abcu
