// Serial vs OpenMP comparison for the enumeration kernels, plus the
// polynomial paths against their exhaustive counterparts. The same seeds
// feed every benchmark, so the serial and parallel rows process identical
// profile spaces (and, per the determinism tests, identical results).

#include <benchmark/benchmark.h>

#include "abcu/distribution.hpp"
#include "abcu/models.hpp"
#include "abcu/optimize.hpp"
#include "abcu/oracle.hpp"
#include "abcu/swmprob.hpp"

namespace {

using namespace abcu;

// n voters with exactly three support sets each: 3^n plausible profiles.
UncertaintyModel lottery_instance(int voters) {
    const int m = 6;
    LotteryModel model;
    model.instance = {voters, m, 3};
    for (int i = 0; i < voters; ++i) {
        int a = 1 + i % m;
        int b = 1 + (i + 1) % m;
        int c = 1 + (i + 3) % m;
        model.voters.push_back({{Rational(1, 2), CandidateSet(std::vector<int>{a, b})},
                                {Rational(1, 4), CandidateSet(std::vector<int>{b, c})},
                                {Rational(1, 4), CandidateSet{}}});
    }
    return model;
}

// 6x6 three-valued matrix with exactly `uncertain_cells` unknown entries.
UncertaintyModel tva_instance(int uncertain_cells) {
    const int n = 6;
    const int m = 6;
    CandidateProbabilityModel model;
    model.instance = {n, m, 3};
    model.three_valued = true;
    model.p.assign(n, std::vector<Rational>(m, Rational(0)));
    for (int i = 0; i < n; ++i)
        for (int c = 0; c < m; ++c)
            if ((i + c) % 2 == 0) model.p[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] = 1;
    int placed = 0;
    for (int i = 0; i < n && placed < uncertain_cells; ++i)
        for (int c = 0; c < m && placed < uncertain_cells; ++c) {
            model.p[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] = Rational(1, 2);
            ++placed;
        }
    return model;
}

const EnumerationLimits kWideLimits{100'000'000, 30, 1'000'000};

void oracle_swm_prob_serial(benchmark::State& state) {
    auto model = lottery_instance(static_cast<int>(state.range(0)));
    const CandidateSet committee({1, 2, 3});
    for (auto _ : state) {
        auto result = oracle::swm_prob(model, committee, kWideLimits, Exec::serial);
        benchmark::DoNotOptimize(result.value);
    }
    state.counters["profiles"] = static_cast<double>(plausible_profile_count(model));
}
BENCHMARK(oracle_swm_prob_serial)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void oracle_swm_prob_parallel(benchmark::State& state) {
    auto model = lottery_instance(static_cast<int>(state.range(0)));
    const CandidateSet committee({1, 2, 3});
    for (auto _ : state) {
        auto result = oracle::swm_prob(model, committee, kWideLimits, Exec::parallel);
        benchmark::DoNotOptimize(result.value);
    }
    state.counters["profiles"] = static_cast<double>(plausible_profile_count(model));
}
BENCHMARK(oracle_swm_prob_parallel)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void oracle_max_swm_serial(benchmark::State& state) {
    auto model = lottery_instance(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto result = oracle::max_swm(model, kWideLimits, Exec::serial);
        benchmark::DoNotOptimize(result.probability);
    }
}
BENCHMARK(oracle_max_swm_serial)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void oracle_max_swm_parallel(benchmark::State& state) {
    auto model = lottery_instance(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto result = oracle::max_swm(model, kWideLimits, Exec::parallel);
        benchmark::DoNotOptimize(result.probability);
    }
}
BENCHMARK(oracle_max_swm_parallel)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

// The polynomial candidate-probability path against enumerating all
// 2^uncertain realizations: the gap is the point of the DP.
void swm_prob_cp_decomposition(benchmark::State& state) {
    auto model = tva_instance(static_cast<int>(state.range(0)));
    const CandidateSet committee({1, 2, 3});
    for (auto _ : state) {
        auto report = swm_prob(model, committee, kWideLimits);
        benchmark::DoNotOptimize(report.probability);
    }
}
BENCHMARK(swm_prob_cp_decomposition)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void swm_prob_cp_enumeration(benchmark::State& state) {
    auto model = tva_instance(static_cast<int>(state.range(0)));
    const CandidateSet committee({1, 2, 3});
    for (auto _ : state) {
        auto result = oracle::swm_prob(model, committee, kWideLimits);
        benchmark::DoNotOptimize(result.value);
    }
}
BENCHMARK(swm_prob_cp_enumeration)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void sw_dist_lottery_dp(benchmark::State& state) {
    auto model = lottery_instance(static_cast<int>(state.range(0)));
    const CandidateSet committee({1, 2, 3});
    for (auto _ : state) {
        auto dist = sw_dist(model, committee);
        benchmark::DoNotOptimize(dist.support_max());
    }
}
BENCHMARK(sw_dist_lottery_dp)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void sw_dist_lottery_enumeration(benchmark::State& state) {
    auto model = lottery_instance(static_cast<int>(state.range(0)));
    const CandidateSet committee({1, 2, 3});
    for (auto _ : state) {
        auto result = oracle::sw_dist(model, committee, kWideLimits);
        benchmark::DoNotOptimize(result.value.support_max());
    }
}
BENCHMARK(sw_dist_lottery_enumeration)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
