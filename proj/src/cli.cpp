#include "abcu/cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <sstream>

#include "abcu/core.hpp"
#include "abcu/distribution.hpp"
#include "abcu/errors.hpp"
#include "abcu/generator.hpp"
#include "abcu/io.hpp"
#include "abcu/necessity.hpp"
#include "abcu/optimize.hpp"
#include "abcu/swmprob.hpp"

namespace abcu::cli {

namespace {

using nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

ordered_json probability_json(const Rational& value) {
    return {{"fraction", to_fraction_string(value)}, {"decimal", to_decimal_string(value)}};
}

ordered_json distribution_json(const WelfareDistribution& dist) {
    ordered_json probs = ordered_json::object();
    for (int v = dist.support_min(); v <= dist.support_max(); ++v)
        probs[std::to_string(v)] = to_fraction_string(dist.at(v));
    return {{"support_min", dist.support_min()},
            {"support_max", dist.support_max()},
            {"probs", std::move(probs)}};
}

ordered_json committee_json(const CandidateSet& committee) {
    ordered_json out = ordered_json::array();
    for (int c : committee) out.push_back(c);
    return out;
}

CandidateSet committee_from_spec(const RunSpec& spec, const Instance& inst) {
    if (!spec.committee)
        throw ValidationError("command '" + spec.command + "' needs --committee");
    CandidateSet committee(*spec.committee);
    validate_committee(inst, committee);
    return committee;
}

ordered_json echo_json(const RunSpec& spec) {
    ordered_json echo{{"command", spec.command}};
    if (!spec.instance_path.empty()) echo["instance"] = spec.instance_path;
    if (spec.committee) echo["committee"] = *spec.committee;
    if (spec.tau) echo["tau"] = *spec.tau;
    if (spec.command == "robust")
        echo["query"] = {{"alpha", to_fraction_string(spec.alpha)},
                         {"beta", to_fraction_string(spec.beta)}};
    return echo;
}

struct VerifyCheck {
    std::string op;
    std::string scope;
    bool equal = false;
    std::string lhs;
    std::string rhs;
};

std::string dist_brief(const WelfareDistribution& dist) {
    std::string out;
    for (int v = dist.support_min(); v <= dist.support_max(); ++v) {
        if (!out.empty()) out += " ";
        out += std::to_string(v) + ":" + to_fraction_string(dist.at(v));
    }
    return out;
}

void verify_committee_ops(const UncertaintyModel& model, const CandidateSet& committee,
                          const std::string& op, const EnumerationLimits& limits,
                          std::vector<VerifyCheck>& checks) {
    const std::string scope = committee.to_string();
    if (op == "all" || op == "prob") {
        auto fast = swm_prob(model, committee, limits);
        auto slow = oracle::swm_prob(model, committee, limits);
        checks.push_back({"prob", scope, fast.probability == slow.value,
                          to_fraction_string(fast.probability), to_fraction_string(slow.value)});
    }
    if (op == "all" || op == "dist") {
        auto fast = sw_dist(model, committee);
        auto slow = oracle::sw_dist(model, committee, limits);
        checks.push_back(
            {"dist", scope, fast == slow.value, dist_brief(fast), dist_brief(slow.value)});
    }
    if (op == "all" || op == "poss") {
        bool fast = is_poss_swm(model, committee, limits);
        auto slow = oracle::is_poss_swm(model, committee, limits);
        checks.push_back({"poss", scope, fast == slow.value, fast ? "true" : "false",
                          slow.value ? "true" : "false"});
    }
    if (op == "all" || op == "nec") {
        bool fast = is_nec_swm(model, committee);
        auto slow = oracle::is_nec_swm(model, committee, limits);
        checks.push_back({"nec", scope, fast == slow.value, fast ? "true" : "false",
                          slow.value ? "true" : "false"});
    }
    if (op == "all" || op == "expected") {
        Rational fast = expected_sw(model, committee);
        Rational slow = oracle::sw_dist(model, committee, limits).value.mean();
        checks.push_back({"expected", scope, fast == slow, to_fraction_string(fast),
                          to_fraction_string(slow)});
    }
}

ResultDocument run_oracle_verify(const RunSpec& spec, const UncertaintyModel& model) {
    const Instance& inst = instance_of(model);
    const std::string& op = spec.verify_op;
    std::vector<VerifyCheck> checks;

    std::vector<CandidateSet> scope;
    if (spec.committee) {
        scope.push_back(committee_from_spec(spec, inst));
    } else {
        scope = enumerate_committees(inst.candidates, inst.committee_size);
    }
    const bool committee_ops = op == "all" || op == "prob" || op == "dist" || op == "poss" ||
                               op == "nec" || op == "expected";
    if (committee_ops) {
        for (const auto& committee : scope)
            verify_committee_ops(model, committee, op, spec.limits, checks);
    }
    if (op == "all" || op == "exists-nec") {
        auto fast = exists_nec_swm(model);
        auto all = oracle::swm_prob_all(model, spec.limits, spec.exec);
        std::optional<CandidateSet> slow;
        for (std::size_t i = 0; i < all.committees.size(); ++i) {
            if (all.probability[i] == 1) {
                slow = all.committees[i];
                break;
            }
        }
        bool equal = fast.has_value() == slow.has_value();
        if (equal && fast) equal = oracle::is_nec_swm(model, *fast, spec.limits).value;
        checks.push_back({"exists-nec", "-", equal, fast ? fast->to_string() : "none",
                          slow ? slow->to_string() : "none"});
    }
    if (op == "all" || op == "maxswm") {
        auto fast = max_swm(model, spec.limits, spec.exec);
        auto slow = oracle::max_swm(model, spec.limits, spec.exec);
        bool equal = fast.objective == slow.probability;
        checks.push_back({"maxswm", "-", equal,
                          fast.committee.to_string() + " @ " + to_fraction_string(fast.objective),
                          slow.committee.to_string() + " @ " +
                              to_fraction_string(slow.probability)});
    }

    bool all_equal = std::all_of(checks.begin(), checks.end(),
                                 [](const VerifyCheck& c) { return c.equal; });
    ordered_json rows = ordered_json::array();
    for (const auto& check : checks)
        rows.push_back({{"op", check.op},
                        {"committee", check.scope},
                        {"verdict", check.equal ? "EQUAL" : "MISMATCH"},
                        {"algorithm", check.lhs},
                        {"oracle", check.rhs}});

    ResultDocument doc;
    doc.body["verdict"] = all_equal ? "EQUAL" : "MISMATCH";
    doc.body["checks"] = std::move(rows);
    doc.exit_code = all_equal ? kOk : kMismatch;
    return doc;
}

ResultDocument run_gen(const RunSpec& spec) {
    ResultDocument doc;
    UncertaintyModel model = [&]() -> UncertaintyModel {
        if (spec.gen_unrobust) {
            auto outcome = gen_unrobust_instance(spec.gen_instance.candidates, spec.gen_p, spec.beta);
            doc.body["achievable"] = probability_json(outcome.achievable);
            if (!outcome.instance) {
                doc.body["feasible"] = false;
                doc.body["note"] = "p + (1-p)^m >= beta: every committee is (alpha,beta)-robust";
                return UncertaintyModel(CandidateProbabilityModel{});
            }
            doc.body["feasible"] = true;
            return UncertaintyModel(*outcome.instance);
        }
        GeneratorConfig config;
        config.kind = spec.gen_kind;
        config.instance = spec.gen_instance;
        config.seed = spec.seed;
        config.lottery_supports = spec.gen_supports;
        config.joint_entries = spec.gen_entries;
        config.max_uncertain_cells = spec.gen_max_uncertain;
        for (const auto& item : spec.gen_menu) config.menu.push_back(parse_rational(item));
        return gen_random(config);
    }();

    if (spec.gen_unrobust && doc.body["feasible"] == false) return doc;

    std::string serialized = serialize_instance(model);
    if (spec.out_path.empty()) {
        doc.stdout_override = serialized;
    } else {
        save_instance(model, spec.out_path);
        doc.body["written"] = spec.out_path;
        doc.body["model"] = model_kind(model);
    }
    return doc;
}

ResultDocument run_bench(const RunSpec& spec) {
    namespace fs = std::filesystem;
    if (spec.bench_dir.empty()) throw ValidationError("bench needs --dir");
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(spec.bench_dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json")
            files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) throw ValidationError("no .json instances under '" + spec.bench_dir + "'");

    ordered_json rows = ordered_json::array();
    for (const auto& path : files) {
        auto model = load_instance(path.string());
        const Instance& inst = instance_of(model);
        ordered_json row{{"instance", path.filename().string()},
                         {"model", model_kind(model)},
                         {"n", inst.voters},
                         {"m", inst.candidates},
                         {"k", inst.committee_size},
                         {"profiles", plausible_profile_count(model)}};
        auto committee = max_exp_sw(model).committee;
        row["committee"] = committee_json(committee);

        auto timed = [&](auto&& fn) -> ordered_json {
            auto start = Clock::now();
            try {
                fn();
                std::ostringstream out;
                out.setf(std::ios::fixed);
                out.precision(3);
                out << ms_since(start);
                return out.str();
            } catch (const ResourceLimitError&) {
                return "capped";
            }
        };
        row["sw_dist_ms"] = timed([&] { sw_dist(model, committee); });
        row["swm_prob_ms"] = timed([&] { swm_prob(model, committee, spec.limits); });
        row["oracle_serial_ms"] =
            timed([&] { oracle::swm_prob(model, committee, spec.limits, Exec::serial); });
        row["oracle_parallel_ms"] =
            timed([&] { oracle::swm_prob(model, committee, spec.limits, Exec::parallel); });
        rows.push_back(std::move(row));
    }
    ResultDocument doc;
    doc.body["bench"] = std::move(rows);
    return doc;
}

}  // namespace

ResultDocument run(const RunSpec& spec) {
    auto start = Clock::now();

    if (spec.command == "gen") {
        auto doc = run_gen(spec);
        if (!doc.body.empty()) {
            ordered_json body{{"spec", echo_json(spec)}};
            body.update(doc.body);
            body["wall_ms"] = ms_since(start);
            doc.body = std::move(body);
        }
        return doc;
    }
    if (spec.command == "bench") {
        auto doc = run_bench(spec);
        ordered_json body{{"spec", echo_json(spec)}};
        body.update(doc.body);
        body["wall_ms"] = ms_since(start);
        doc.body = std::move(body);
        return doc;
    }

    if (spec.instance_path.empty())
        throw ValidationError("command '" + spec.command + "' needs --instance");
    UncertaintyModel model = load_instance(spec.instance_path);
    const Instance& inst = instance_of(model);

    ResultDocument doc;
    ordered_json payload;
    std::string method = "-";
    ordered_json work = ordered_json::object();

    if (spec.command == "check-poss") {
        auto committee = committee_from_spec(spec, inst);
        payload["possibly_swm"] = is_poss_swm(model, committee, spec.limits);
        method = std::holds_alternative<LotteryModel>(model) ? "oracle-enumeration"
                                                             : "constructive";
    } else if (spec.command == "check-nec") {
        auto committee = committee_from_spec(spec, inst);
        payload["necessarily_swm"] = is_nec_swm(model, committee);
        method = "constructive";
    } else if (spec.command == "exists-nec") {
        auto committee = exists_nec_swm(model);
        payload["exists"] = committee.has_value();
        if (committee) payload["committee"] = committee_json(*committee);
        method = "constructive";
    } else if (spec.command == "dist") {
        auto committee = committee_from_spec(spec, inst);
        auto dist = sw_dist(model, committee);
        if (spec.tau) {
            payload["tau"] = *spec.tau;
            payload["probability"] = probability_json(dist.at(*spec.tau));
        } else {
            payload["distribution"] = distribution_json(dist);
            payload["mean"] = probability_json(dist.mean());
        }
        method = std::holds_alternative<JointProbabilityModel>(model) ? "joint-sum"
                 : std::holds_alternative<LotteryModel>(model)        ? "contribution-dp"
                                                                      : "poisson-binomial-dp";
    } else if (spec.command == "prob") {
        auto committee = committee_from_spec(spec, inst);
        auto report = swm_prob(model, committee, spec.limits);
        payload["probability"] = probability_json(report.probability);
        method = to_string(report.method);
        if (report.profiles) work["profiles"] = report.profiles;
        if (report.terms) work["terms"] = report.terms;
    } else if (spec.command == "maxswm") {
        auto result = max_swm(model, spec.limits, spec.exec);
        payload["committee"] = committee_json(result.committee);
        payload["probability"] = probability_json(result.objective);
        ordered_json co = ordered_json::array();
        for (const auto& committee : result.co_optima) co.push_back(committee_json(committee));
        payload["co_optima"] = std::move(co);
        payload["co_optima_complete"] = result.co_optima_complete;
        method = to_string(result.method);
    } else if (spec.command == "maxexpsw") {
        auto result = max_exp_sw(model);
        payload["committee"] = committee_json(result.committee);
        payload["expected_sw"] = probability_json(result.objective);
        ordered_json co = ordered_json::array();
        for (const auto& committee : result.co_optima) co.push_back(committee_json(committee));
        payload["co_optima"] = std::move(co);
        payload["co_optima_count"] = result.co_optima_count.get_str();
        method = to_string(result.method);
    } else if (spec.command == "expected") {
        auto committee = committee_from_spec(spec, inst);
        payload["expected_sw"] = probability_json(expected_sw(model, committee));
        method = "closed-form";
    } else if (spec.command == "robust") {
        auto committee = committee_from_spec(spec, inst);
        auto result = robust_check(model, committee, {spec.alpha, spec.beta}, spec.limits,
                                   spec.exec);
        payload["robust"] = result.robust;
        payload["probability"] = probability_json(result.probability);
        method = "oracle-enumeration";
        work["profiles"] = result.profiles;
    } else if (spec.command == "oracle-verify") {
        doc = run_oracle_verify(spec, model);
        ordered_json body{{"spec", echo_json(spec)}};
        body.update(doc.body);
        body["wall_ms"] = ms_since(start);
        doc.body = std::move(body);
        return doc;
    } else {
        throw ValidationError("unknown command '" + spec.command + "'");
    }

    doc.body = ordered_json{{"spec", echo_json(spec)}};
    doc.body["result"] = std::move(payload);
    doc.body["method"] = method;
    if (!work.empty()) doc.body["work"] = std::move(work);
    doc.body["wall_ms"] = ms_since(start);
    return doc;
}

namespace {

void render_lines(const ordered_json& node, const std::string& indent, std::ostream& out) {
    for (const auto& [key, value] : node.items()) {
        if (value.is_object()) {
            out << indent << key << ":\n";
            render_lines(value, indent + "  ", out);
        } else if (value.is_array() && !value.empty() && value.front().is_object()) {
            // Tables (verify checks, bench rows): one block per element.
            std::size_t index = 0;
            for (const auto& element : value) {
                out << indent << key << "[" << index++ << "]:\n";
                render_lines(element, indent + "  ", out);
            }
        } else if (value.is_array()) {
            out << indent << key << " = " << value.dump() << "\n";
        } else if (value.is_string()) {
            out << indent << key << " = " << value.get<std::string>() << "\n";
        } else {
            out << indent << key << " = " << value.dump() << "\n";
        }
    }
}

}  // namespace

std::string render_text(const ordered_json& body) {
    std::ostringstream out;
    render_lines(body, "", out);
    return out.str();
}

std::string error_record(const std::string& kind, const std::string& message) {
    ordered_json record{{"error", kind}, {"message", message}};
    return record.dump();
}

}  // namespace abcu::cli
