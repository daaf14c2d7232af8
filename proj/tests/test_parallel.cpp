#include <doctest.h>

#include "abcu/oracle.hpp"
#include "abcu/optimize.hpp"
#include "test_helpers.hpp"

using namespace abcu;
using namespace abcu::testing;

TEST_SUITE_BEGIN("parallel");

// The enumeration kernels must return results identical to the serial
// reference: exact arithmetic makes the block reduction order irrelevant,
// and these tests pin that contract down.

TEST_CASE("swm probabilities are identical under serial and parallel scans") {
    for (const std::string kind : {"joint", "lottery", "candidate_prob", "3va"}) {
        for (std::uint64_t seed = 0; seed < 25; ++seed) {
            auto model = random_suite_instance(kind, seed);
            auto serial = oracle::swm_prob_all(model, {}, Exec::serial);
            auto parallel = oracle::swm_prob_all(model, {}, Exec::parallel);
            REQUIRE(serial.committees.size() == parallel.committees.size());
            for (std::size_t i = 0; i < serial.committees.size(); ++i) {
                CHECK(serial.committees[i] == parallel.committees[i]);
                CHECK(serial.probability[i] == parallel.probability[i]);
            }
        }
    }
}

TEST_CASE("welfare distributions are identical under serial and parallel scans") {
    for (const std::string kind : {"lottery", "candidate_prob"}) {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            auto model = random_suite_instance(kind, seed);
            const auto& inst = instance_of(model);
            for (const auto& committee :
                 enumerate_committees(inst.candidates, inst.committee_size)) {
                CHECK(oracle::sw_dist(model, committee, {}, Exec::serial).value ==
                      oracle::sw_dist(model, committee, {}, Exec::parallel).value);
            }
        }
    }
}

TEST_CASE("robustness masses are identical under serial and parallel scans") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto model = random_suite_instance("3va", seed);
        const auto& inst = instance_of(model);
        for (const auto& committee : enumerate_committees(inst.candidates, inst.committee_size)) {
            auto serial = robust_check(model, committee, {rat("1/2"), rat("1/2")}, {},
                                       Exec::serial);
            auto parallel = robust_check(model, committee, {rat("1/2"), rat("1/2")}, {},
                                         Exec::parallel);
            CHECK(serial.probability == parallel.probability);
            CHECK(serial.robust == parallel.robust);
        }
    }
}

TEST_CASE("a larger product space still reduces deterministically") {
    // 10 voters with 3 supports each: 59049 profiles, enough to split into
    // many blocks.
    GeneratorConfig config;
    config.kind = "lottery";
    config.instance = {10, 4, 2};
    config.seed = 3141;
    config.lottery_supports = 3;
    auto model = gen_random(config);

    EnumerationLimits limits;
    limits.max_profiles = 100000;
    auto serial = oracle::swm_prob_all(model, limits, Exec::serial);
    auto parallel = oracle::swm_prob_all(model, limits, Exec::parallel);
    for (std::size_t i = 0; i < serial.committees.size(); ++i)
        CHECK(serial.probability[i] == parallel.probability[i]);
    CHECK(serial.report.profiles == parallel.report.profiles);
}

TEST_SUITE_END();
