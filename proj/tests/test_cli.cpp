#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "abcu/cli.hpp"
#include "abcu/errors.hpp"
#include "abcu/io.hpp"
#include "test_helpers.hpp"

using namespace abcu;
using namespace abcu::testing;

TEST_SUITE_BEGIN("cli");

namespace {

std::string data_path(const std::string& name) { return std::string(ABCU_DATA_DIR) + "/" + name; }

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("/tmp/abcu_test_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("instance files round-trip through parse and serialize") {
    for (const auto& name : {"lottery_3v3c.json", "cp_2v2c.json", "tva_3v4c.json"}) {
        auto model = load_instance(data_path(name));
        auto again = parse_instance(serialize_instance(model));
        CHECK(serialize_instance(again) == serialize_instance(model));
        CHECK(model_kind(again) == model_kind(model));
    }
}

TEST_CASE("parser rejects malformed documents") {
    CHECK_THROWS_AS(parse_instance("not json"), ValidationError);
    CHECK_THROWS_AS(parse_instance("{}"), ValidationError);
    CHECK_THROWS_AS(parse_instance(R"({"model":"joint","n":1,"m":1,"k":1})"), ValidationError);
    // JSON floats are not exact.
    CHECK_THROWS_WITH_AS(
        parse_instance(
            R"({"model":"candidate_prob","n":1,"m":1,"k":1,"p":[[0.35]]})"),
        doctest::Contains("not exact"), ValidationError);
    // Structural violations surface through validation.
    CHECK_THROWS_AS(
        parse_instance(
            R"({"model":"candidate_prob","n":1,"m":2,"k":1,"p":[["7/5","0"]]})"),
        ValidationError);
}

TEST_CASE("dist command reports the worked probability both ways") {
    cli::RunSpec spec;
    spec.command = "dist";
    spec.instance_path = data_path("lottery_3v3c.json");
    spec.committee = std::vector<int>{2, 3};
    spec.tau = 3;
    auto result = cli::run(spec);
    CHECK(result.exit_code == cli::kOk);
    CHECK(result.body["result"]["probability"]["fraction"] == "19/50");
    CHECK(result.body["result"]["probability"]["decimal"] == "0.38");
    // The fraction string re-parses to the exact computed rational.
    CHECK(parse_rational(result.body["result"]["probability"]["fraction"].get<std::string>()) ==
          rat("19/50"));
}

TEST_CASE("prob command reports the worked 3VA value") {
    cli::RunSpec spec;
    spec.command = "prob";
    spec.instance_path = data_path("tva_3v4c.json");
    spec.committee = std::vector<int>{3, 4};
    auto result = cli::run(spec);
    CHECK(result.body["result"]["probability"]["fraction"] == "19/32");
    CHECK(result.body["method"] == "cp-decomposition");
}

TEST_CASE("oracle-verify reports EQUAL over the golden corpus") {
    for (const auto& name : {"lottery_3v3c.json", "cp_2v2c.json", "tva_3v4c.json"}) {
        cli::RunSpec spec;
        spec.command = "oracle-verify";
        spec.instance_path = data_path(name);
        auto result = cli::run(spec);
        CHECK(result.exit_code == cli::kOk);
        CHECK(result.body["verdict"] == "EQUAL");
        for (const auto& check : result.body["checks"]) CHECK(check["verdict"] == "EQUAL");
    }
}

TEST_CASE("missing committee is a validation error") {
    cli::RunSpec spec;
    spec.command = "prob";
    spec.instance_path = data_path("tva_3v4c.json");
    CHECK_THROWS_AS(cli::run(spec), ValidationError);
}

TEST_CASE("generated instances are deterministic and valid") {
    TempFile a("gen_a.json");
    TempFile b("gen_b.json");
    for (const auto& kind : {"joint", "lottery", "candidate_prob", "3va"}) {
        cli::RunSpec spec;
        spec.command = "gen";
        spec.gen_kind = kind;
        spec.gen_instance = {4, 4, 2};
        spec.seed = 99;
        spec.out_path = a.path;
        cli::run(spec);
        spec.out_path = b.path;
        cli::run(spec);
        CHECK(slurp(a.path) == slurp(b.path));  // byte-identical per seed

        auto model = load_instance(a.path);
        CHECK(validate(model).empty());
        CHECK(model_kind(model) == kind);
    }
}

TEST_CASE("generated 3va cells stay on the three-value menu") {
    cli::RunSpec spec;
    spec.command = "gen";
    spec.gen_kind = "3va";
    spec.gen_instance = {5, 5, 3};
    spec.seed = 4242;
    auto result = cli::run(spec);
    auto model = parse_instance(result.stdout_override);
    const auto& cp = std::get<CandidateProbabilityModel>(model);
    const Rational half(1, 2);
    for (const auto& row : cp.p)
        for (const auto& cell : row) CHECK((cell == 0 || cell == half || cell == 1));
}

TEST_CASE("generated lottery honors the support bound with exact sums") {
    cli::RunSpec spec;
    spec.command = "gen";
    spec.gen_kind = "lottery";
    spec.gen_instance = {5, 4, 2};
    spec.seed = 7;
    spec.gen_supports = 3;
    auto result = cli::run(spec);
    auto model = parse_instance(result.stdout_override);
    const auto& lottery = std::get<LotteryModel>(model);
    for (const auto& dist : lottery.voters) {
        CHECK(dist.size() <= 3);
        Rational total(0);
        for (const auto& support : dist) total += support.probability;
        CHECK(total == 1);
    }
}

TEST_CASE("gen --unrobust emits the adversarial family or reports infeasible") {
    TempFile out("unrobust.json");
    cli::RunSpec spec;
    spec.command = "gen";
    spec.gen_unrobust = true;
    spec.gen_instance.candidates = 20;
    spec.gen_p = rat("1/10");
    spec.beta = rat("1/2");
    spec.out_path = out.path;
    auto result = cli::run(spec);
    CHECK(result.exit_code == cli::kOk);
    CHECK(result.body["feasible"] == true);
    auto model = load_instance(out.path);
    CHECK(instance_of(model).candidates == 20);
    CHECK(instance_of(model).committee_size == 1);

    spec.gen_p = rat("1/2");
    spec.gen_instance.candidates = 1;
    auto infeasible = cli::run(spec);
    CHECK(infeasible.body["feasible"] == false);
    CHECK(infeasible.body["achievable"]["fraction"] == "1");
}

TEST_CASE("bench walks a directory and reports per-path timings") {
    cli::RunSpec spec;
    spec.command = "bench";
    spec.bench_dir = ABCU_DATA_DIR;
    auto result = cli::run(spec);
    CHECK(result.exit_code == cli::kOk);
    REQUIRE(result.body["bench"].size() == 3);
    for (const auto& row : result.body["bench"]) {
        CHECK(row.contains("profiles"));
        CHECK(row.contains("swm_prob_ms"));
        CHECK(row.contains("oracle_serial_ms"));
        CHECK(row.contains("oracle_parallel_ms"));
    }
}

TEST_CASE("resource limits surface with the dedicated exit semantics") {
    cli::RunSpec spec;
    spec.command = "maxswm";
    spec.instance_path = data_path("lottery_3v3c.json");
    spec.limits.max_profiles = 2;
    CHECK_THROWS_AS(cli::run(spec), ResourceLimitError);

    // The CLI front end maps the exception kinds onto distinct exit codes.
    CHECK(cli::kValidation != cli::kResourceLimit);
    CHECK(cli::kResourceLimit != cli::kMismatch);
    CHECK(cli::error_record("resource-limit", "cap").find("resource-limit") !=
          std::string::npos);
}

TEST_CASE("text rendering keeps result fields greppable") {
    cli::RunSpec spec;
    spec.command = "expected";
    spec.instance_path = data_path("tva_3v4c.json");
    spec.committee = std::vector<int>{3, 4};
    auto result = cli::run(spec);
    auto text = cli::render_text(result.body);
    CHECK(text.find("fraction = 7/2") != std::string::npos);
    CHECK(text.find("decimal = 3.5") != std::string::npos);
}

TEST_SUITE_END();
