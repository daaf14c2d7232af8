#include <doctest.h>

#include <algorithm>

#include "abcu/errors.hpp"
#include "abcu/oracle.hpp"
#include "test_helpers.hpp"

using namespace abcu;
using namespace abcu::testing;

TEST_SUITE_BEGIN("oracle");

TEST_CASE("worked 3VA instance probabilities") {
    auto model = UncertaintyModel(tva_worked_example());

    auto best = oracle::swm_prob(model, set({3, 4}));
    CHECK(best.value == rat("19/32"));
    CHECK(best.report.profiles == 32);

    CHECK(oracle::swm_prob(model, set({1, 3})).value == rat("18/32"));
    CHECK(oracle::swm_prob(model, set({2, 3})).value == rat("18/32"));

    CHECK(oracle::is_poss_swm(model, set({3, 4})).value);
    CHECK_FALSE(oracle::is_nec_swm(model, set({3, 4})).value);

    auto max = oracle::max_swm(model);
    CHECK(max.committee == set({3, 4}));
    CHECK(max.probability == rat("19/32"));
    CHECK(max.report.committees == 6);
}

TEST_CASE("worked distribution values") {
    auto lottery = UncertaintyModel(lottery_worked_example());
    auto dist = oracle::sw_dist(lottery, set({2, 3}));
    CHECK(dist.value.at(3) == rat("19/50"));
    CHECK(dist.value.total() == 1);

    auto cp = UncertaintyModel(cp_worked_example());
    CHECK(oracle::sw_dist(cp, set({1, 2})).value.at(3) == rat("23/50"));
}

TEST_CASE("certain models concentrate on the greedy committee") {
    LotteryModel certain{{3, 3, 2},
                         {{{rat("1"), set({1, 2})}}, {{rat("1"), set({3})}}, {{rat("1"), set({2, 3})}}}};
    auto model = UncertaintyModel(certain);
    auto best = oracle::max_swm(model);
    CHECK(best.committee == set({2, 3}));
    CHECK(best.probability == 1);

    auto dist = oracle::sw_dist(model, set({2, 3}));
    CHECK(dist.value.support_min() == 4);
    CHECK(dist.value.support_max() == 4);
    CHECK(dist.value.at(4) == 1);
}

TEST_CASE("k = m makes the unique committee both possible and necessary") {
    CandidateProbabilityModel cp{{2, 2, 2}, {{rat("1/2"), rat("1/4")}, {rat("3/4"), rat("0")}},
                                 false};
    auto model = UncertaintyModel(cp);
    CHECK(oracle::is_poss_swm(model, set({1, 2})).value);
    CHECK(oracle::is_nec_swm(model, set({1, 2})).value);
}

TEST_CASE("single-voter candidate probability argmax") {
    CandidateProbabilityModel cp{{1, 3, 1}, {{rat("0.9"), rat("0.2"), rat("0.1")}}, false};
    auto best = oracle::max_swm(UncertaintyModel(cp));
    CHECK(best.committee == set({1}));
    CHECK(best.report.profiles == 8);
    CHECK(best.report.committees == 3);
}

TEST_CASE("probability bounds and the consistency triangle") {
    for (const std::string kind : {"joint", "lottery", "candidate_prob", "3va"}) {
        for (std::uint64_t seed = 0; seed < 25; ++seed) {
            auto model = random_suite_instance(kind, seed);
            auto all = oracle::swm_prob_all(model);
            for (std::size_t i = 0; i < all.committees.size(); ++i) {
                const auto& committee = all.committees[i];
                const Rational& probability = all.probability[i];
                CHECK(sgn(probability) >= 0);
                CHECK(probability <= 1);
                CHECK(oracle::is_poss_swm(model, committee).value == (sgn(probability) > 0));
                CHECK(oracle::is_nec_swm(model, committee).value == (probability == 1));
            }
        }
    }
}

TEST_CASE("distributions sum to one exactly") {
    for (const std::string kind : {"joint", "lottery", "candidate_prob"}) {
        for (std::uint64_t seed = 0; seed < 15; ++seed) {
            auto model = random_suite_instance(kind, seed);
            const auto& inst = instance_of(model);
            for (const auto& committee :
                 enumerate_committees(inst.candidates, inst.committee_size)) {
                CHECK(oracle::sw_dist(model, committee).value.total() == 1);
            }
        }
    }
}

TEST_CASE("oracle reports enumeration work") {
    auto model = UncertaintyModel(lottery_worked_example());
    auto result = oracle::swm_prob(model, set({2, 3}));
    CHECK(result.report.profiles == 18);
    CHECK(result.report.committees == 1);
}

TEST_CASE("the profile cap fails loudly") {
    auto model = UncertaintyModel(lottery_worked_example());
    EnumerationLimits limits;
    limits.max_profiles = 4;
    CHECK_THROWS_AS(oracle::swm_prob(model, set({2, 3}), limits), ResourceLimitError);
    try {
        oracle::swm_prob(model, set({2, 3}), limits);
    } catch (const ResourceLimitError& e) {
        CHECK(e.attempted() == 18);
        CHECK(e.cap() == 4);
    }
}

TEST_SUITE_END();
