#include <doctest.h>

#include <algorithm>

#include "abcu/distribution.hpp"
#include "abcu/errors.hpp"
#include "abcu/oracle.hpp"
#include "test_helpers.hpp"

using namespace abcu;
using namespace abcu::testing;

TEST_SUITE_BEGIN("distribution");

TEST_CASE("contribution table matches the worked lottery") {
    auto table = contribution_table(lottery_worked_example(), set({2, 3}));
    REQUIRE(table.rows.size() == 3);
    CHECK(table.rows[0] == std::vector<Rational>{rat("0"), rat("3/10"), rat("7/10")});
    CHECK(table.rows[1] == std::vector<Rational>{rat("0"), rat("1"), rat("0")});
    CHECK(table.rows[2] == std::vector<Rational>{rat("1/2"), rat("1/10"), rat("2/5")});
    for (const auto& row : table.rows) {
        Rational total(0);
        for (const auto& p : row) total += p;
        CHECK(total == 1);
    }
}

TEST_CASE("lottery welfare distribution matches the worked table") {
    auto dist = sw_dist(UncertaintyModel(lottery_worked_example()), set({2, 3}));
    CHECK(dist.at(0) == 0);
    CHECK(dist.at(1) == 0);
    CHECK(dist.at(2) == rat("3/20"));
    CHECK(dist.at(3) == rat("19/50"));
    CHECK(dist.at(4) == rat("19/100"));
    CHECK(dist.at(5) == rat("7/25"));
    CHECK(dist.at(6) == 0);
    CHECK(dist.total() == 1);
}

TEST_CASE("candidate-probability distribution matches the worked value") {
    auto dist = sw_dist(UncertaintyModel(cp_worked_example()), set({1, 2}));
    CHECK(dist.at(3) == rat("23/50"));
    CHECK(dist.support_min() == 1);  // one certain approval
    CHECK(dist.support_max() == 4);
    CHECK(dist.total() == 1);
}

TEST_CASE("joint distributions accumulate entry indicators") {
    JointProbabilityModel joint{{2, 2, 1}, {{rat("1/3"), profile({{1}, {1}})},
                                            {rat("2/3"), profile({{}, {2}})}}};
    auto dist = sw_dist(UncertaintyModel(joint), set({1}));
    CHECK(dist.at(2) == rat("1/3"));
    CHECK(dist.at(0) == rat("2/3"));
    CHECK(dist.at(1) == 0);
}

TEST_CASE("approval-score distributions on the worked 3VA instance") {
    auto model = UncertaintyModel(tva_worked_example());

    // Candidate 3 is certainly approved by voters 1 and 2 only.
    auto c3 = as_dist(model, 3);
    CHECK(c3.support_min() == 2);
    CHECK(c3.support_max() == 2);
    CHECK(c3.at(2) == 1);

    // Candidate 4 is unknown everywhere: Binomial(3, 1/2).
    auto c4 = as_dist(model, 4);
    CHECK(c4.at(0) == rat("1/8"));
    CHECK(c4.at(1) == rat("3/8"));
    CHECK(c4.at(2) == rat("3/8"));
    CHECK(c4.at(3) == rat("1/8"));

    // A certain column is a point mass at n.
    CandidateProbabilityModel all_ones{{3, 2, 1}, {{rat("1"), rat("0")},
                                                   {rat("1"), rat("1/2")},
                                                   {rat("1"), rat("0")}},
                                       false};
    auto c1 = as_dist(UncertaintyModel(all_ones), 1);
    CHECK(c1.at(3) == 1);
}

TEST_CASE("tail probabilities") {
    auto model = UncertaintyModel(lottery_worked_example());
    CHECK(sw_tail(model, set({2, 3}), 5) == rat("7/25"));
    CHECK(sw_tail(model, set({2, 3}), 0) == 1);
    CHECK(sw_tail(model, set({2, 3}), 7) == 0);
}

TEST_CASE("poisson binomial edge cases") {
    CHECK(poisson_binomial({}) == std::vector<Rational>{rat("1")});
    CHECK(poisson_binomial({rat("1")}) == std::vector<Rational>{rat("0"), rat("1")});
    CHECK(poisson_binomial({rat("0"), rat("1/2")}) ==
          std::vector<Rational>{rat("1/2"), rat("1/2"), rat("0")});
}

TEST_CASE("distribution equality compares as functions") {
    WelfareDistribution a(2, {rat("1/2"), rat("1/2")});
    WelfareDistribution b(0, {rat("0"), rat("0"), rat("1/2"), rat("1/2"), rat("0")});
    CHECK(a == b);
    CHECK(a.support_min() == 2);
    CHECK(b.support_min() == 2);  // trimmed
}

TEST_CASE("invalid committees are rejected") {
    auto model = UncertaintyModel(lottery_worked_example());
    CHECK_THROWS_AS(sw_dist(model, set({2})), ValidationError);
    CHECK_THROWS_AS(as_dist(model, 9), ValidationError);
}

TEST_CASE("as_dist equals direct enumeration for every candidate") {
    for (const std::string kind : {"joint", "lottery", "candidate_prob", "3va"}) {
        for (std::uint64_t seed = 0; seed < 25; ++seed) {
            auto model = random_suite_instance(kind, seed);
            const auto& inst = instance_of(model);
            for (int c = 1; c <= inst.candidates; ++c) {
                std::vector<Rational> probs(static_cast<std::size_t>(inst.voters) + 1,
                                            Rational(0));
                for (const auto& [probability, prof] : enumerate_plausible(model)) {
                    int score = 0;
                    for (const auto& approvals : prof) score += approvals.contains(c) ? 1 : 0;
                    probs[static_cast<std::size_t>(score)] += probability;
                }
                CHECK(as_dist(model, c) == WelfareDistribution(0, std::move(probs)));
            }
        }
    }
}

TEST_CASE("sw_dist equals the enumeration oracle on every model") {
    for (const std::string kind : {"joint", "lottery", "candidate_prob", "3va"}) {
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            auto model = random_suite_instance(kind, seed);
            const auto& inst = instance_of(model);
            for (const auto& committee :
                 enumerate_committees(inst.candidates, inst.committee_size)) {
                CHECK(sw_dist(model, committee) == oracle::sw_dist(model, committee).value);
            }
        }
    }
}

TEST_CASE("binomial symmetry when every uncertain cell is 1/2") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto model = random_suite_instance("3va", seed);
        const auto& inst = instance_of(model);
        for (const auto& committee : enumerate_committees(inst.candidates, inst.committee_size)) {
            auto dist = sw_dist(model, committee);
            int lo = dist.support_min();
            int hi = dist.support_max();
            for (int v = lo; v <= hi; ++v) CHECK(dist.at(v) == dist.at(hi - (v - lo)));
        }
    }
}

TEST_CASE("mean of sw_dist equals the summed as_dist means") {
    for (const std::string kind : {"joint", "lottery", "candidate_prob"}) {
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            auto model = random_suite_instance(kind, seed);
            const auto& inst = instance_of(model);
            for (const auto& committee :
                 enumerate_committees(inst.candidates, inst.committee_size)) {
                Rational summed(0);
                for (int c : committee) summed += as_dist(model, c).mean();
                CHECK(sw_dist(model, committee).mean() == summed);
            }
        }
    }
}

TEST_SUITE_END();
