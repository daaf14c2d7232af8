#include <doctest.h>

#include "abcu/errors.hpp"
#include "abcu/necessity.hpp"
#include "abcu/swmprob.hpp"
#include "test_helpers.hpp"

using namespace abcu;
using namespace abcu::testing;

TEST_SUITE_BEGIN("swmprob");

TEST_CASE("worked 3VA probabilities via the decomposition") {
    auto model = UncertaintyModel(tva_worked_example());

    auto report = swm_prob(model, set({1, 3}));
    CHECK(report.probability == rat("18/32"));
    CHECK(report.method == SwmProbMethod::cp_decomposition);

    CHECK(swm_prob(model, set({2, 3})).probability == rat("18/32"));
    CHECK(swm_prob(model, set({3, 4})).probability == rat("19/32"));
}

TEST_CASE("certain top-k columns have probability one") {
    CandidateProbabilityModel cp{{2, 3, 2},
                                 {{rat("1"), rat("1"), rat("0")}, {rat("1"), rat("1"), rat("1/2")}},
                                 false};
    CHECK(swm_prob(UncertaintyModel(cp), set({1, 2})).probability == 1);
}

TEST_CASE("joint probabilities sum entry indicators") {
    JointProbabilityModel joint{{1, 2, 1}, {{rat("1/3"), profile({{1}})},
                                            {rat("2/3"), profile({{2}})}}};
    auto report = swm_prob(UncertaintyModel(joint), set({2}));
    CHECK(report.probability == rat("2/3"));
    CHECK(report.method == SwmProbMethod::joint_sum);
    CHECK(report.profiles == 2);
}

TEST_CASE("lottery goes through capped enumeration") {
    auto model = UncertaintyModel(lottery_worked_example());
    auto report = swm_prob(model, set({2, 3}));
    CHECK(report.method == SwmProbMethod::oracle_enumeration);
    CHECK(report.profiles == 18);
    CHECK(report.probability == oracle::swm_prob(model, set({2, 3})).value);

    EnumerationLimits limits;
    limits.max_profiles = 3;
    CHECK_THROWS_WITH_AS(swm_prob(model, set({2, 3}), limits), doctest::Contains("#P-complete"),
                         ResourceLimitError);
}

TEST_CASE("swm_prob equals the oracle exactly on every model") {
    for (const std::string kind : {"joint", "lottery", "candidate_prob", "3va"}) {
        for (std::uint64_t seed = 0; seed < 60; ++seed) {
            auto model = random_suite_instance(kind, seed);
            auto all = oracle::swm_prob_all(model);
            for (std::size_t i = 0; i < all.committees.size(); ++i) {
                CHECK(swm_prob(model, all.committees[i]).probability == all.probability[i]);
            }
        }
    }
}

TEST_CASE("consistency triangle with the necessity module") {
    for (const std::string kind : {"joint", "lottery", "candidate_prob", "3va"}) {
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            auto model = random_suite_instance(kind, seed);
            const auto& inst = instance_of(model);
            for (const auto& committee :
                 enumerate_committees(inst.candidates, inst.committee_size)) {
                const Rational probability = swm_prob(model, committee).probability;
                CHECK((probability == 1) == is_nec_swm(model, committee));
                CHECK((sgn(probability) > 0) == is_poss_swm(model, committee));
            }
        }
    }
}

TEST_CASE("every profile has an SWM committee, so probabilities sum to at least one") {
    for (const std::string kind : {"joint", "lottery", "candidate_prob"}) {
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            auto model = random_suite_instance(kind, seed);
            const auto& inst = instance_of(model);
            Rational total(0);
            for (const auto& committee :
                 enumerate_committees(inst.candidates, inst.committee_size))
                total += swm_prob(model, committee).probability;
            CHECK(total >= 1);
        }
    }
}

TEST_SUITE_END();
