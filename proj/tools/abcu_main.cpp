// Command-line front end: parses one subcommand into a RunSpec, runs it and
// prints the result document (text by default, JSON with --format json).

#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "abcu/cli.hpp"
#include "abcu/errors.hpp"

namespace {

std::vector<int> parse_committee_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoi(item));
    }
    if (out.empty()) throw abcu::ValidationError("--committee needs at least one candidate index");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"approval-based committee voting under uncertain preferences"};
    app.require_subcommand(1);

    abcu::cli::RunSpec spec;
    std::string committee_text;
    std::string alpha_text = "1/2";
    std::string beta_text = "1/2";
    std::string gen_p_text = "1/2";
    std::string menu_text;
    int tau = -1;
    std::string exec_text = "auto";

    auto add_common = [&](CLI::App* cmd, bool needs_instance) {
        if (needs_instance)
            cmd->add_option("--instance,-i", spec.instance_path, "instance file")->required();
        cmd->add_option("--format", spec.format, "output format: text|json")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--cap-profiles", spec.limits.max_profiles,
                        "plausible-profile cap for enumeration paths");
        cmd->add_option("--cap-uncertain", spec.limits.max_uncertain_per_voter,
                        "per-voter uncertain-cell cap for cp-to-lottery expansion");
        cmd->add_option("--cap-committees", spec.limits.max_committees,
                        "committee cap for exhaustive search");
        cmd->add_option("--exec", exec_text, "enumeration kernels: auto|serial|parallel")
            ->check(CLI::IsMember({"auto", "serial", "parallel"}));
    };
    auto add_committee = [&](CLI::App* cmd, bool required) {
        auto* opt = cmd->add_option("--committee,-w", committee_text,
                                    "committee as comma-separated candidate indices, e.g. 3,4");
        if (required) opt->required();
    };

    auto* check_poss = app.add_subcommand("check-poss", "is the committee possibly SWM?");
    add_common(check_poss, true);
    add_committee(check_poss, true);

    auto* check_nec = app.add_subcommand("check-nec", "is the committee necessarily SWM?");
    add_common(check_nec, true);
    add_committee(check_nec, true);

    auto* exists_nec = app.add_subcommand("exists-nec", "find a necessarily-SWM committee");
    add_common(exists_nec, true);

    auto* dist = app.add_subcommand("dist", "social-welfare distribution of a committee");
    add_common(dist, true);
    add_committee(dist, true);
    dist->add_option("--tau", tau, "report only Pr[SW = tau]");

    auto* prob = app.add_subcommand("prob", "probability that a committee is SWM");
    add_common(prob, true);
    add_committee(prob, true);

    auto* maxswm = app.add_subcommand("maxswm", "committee maximizing Pr[W is SWM]");
    add_common(maxswm, true);

    auto* maxexpsw = app.add_subcommand("maxexpsw", "committee maximizing expected welfare");
    add_common(maxexpsw, true);

    auto* expected = app.add_subcommand("expected", "expected social welfare of a committee");
    add_common(expected, true);
    add_committee(expected, true);

    auto* robust = app.add_subcommand("robust", "(alpha,beta)-robustness of a committee");
    add_common(robust, true);
    add_committee(robust, true);
    robust->add_option("--alpha", alpha_text, "welfare fraction in (0,1]");
    robust->add_option("--beta", beta_text, "probability bound in (0,1]");

    auto* verify = app.add_subcommand("oracle-verify",
                                      "run fast paths and the enumeration oracle, compare exactly");
    add_common(verify, true);
    add_committee(verify, false);
    verify->add_option("--op", spec.verify_op, "all|prob|dist|poss|nec|exists-nec|maxswm|expected")
        ->check(CLI::IsMember(
            {"all", "prob", "dist", "poss", "nec", "exists-nec", "maxswm", "expected"}));

    auto* gen = app.add_subcommand("gen", "generate a random (or adversarial) instance");
    add_common(gen, false);
    gen->add_option("--model", spec.gen_kind, "joint|lottery|candidate_prob|3va")
        ->check(CLI::IsMember({"joint", "lottery", "candidate_prob", "3va"}));
    gen->add_option("-n", spec.gen_instance.voters, "voters");
    gen->add_option("-m", spec.gen_instance.candidates, "candidates");
    gen->add_option("-k", spec.gen_instance.committee_size, "committee size");
    gen->add_option("--seed", spec.seed, "generator seed");
    gen->add_option("--supports", spec.gen_supports, "max lottery support sets per voter");
    gen->add_option("--entries", spec.gen_entries, "max joint entries");
    gen->add_option("--menu", menu_text,
                    "comma-separated probability menu for candidate_prob cells");
    gen->add_option("--max-uncertain", spec.gen_max_uncertain,
                    "cap on uncertain cells (candidate_prob/3va)");
    gen->add_option("--out,-o", spec.out_path, "write the instance here instead of stdout");
    gen->add_flag("--unrobust", spec.gen_unrobust,
                  "emit the single-voter uniform-p family with no robust committee");
    gen->add_option("--p", gen_p_text, "approval probability for --unrobust");
    gen->add_option("--beta", beta_text, "robustness bound for --unrobust");

    auto* bench = app.add_subcommand("bench", "timing table over a directory of instances");
    add_common(bench, false);
    bench->add_option("--dir", spec.bench_dir, "directory of .json instances")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        spec.command = app.get_subcommands().front()->get_name();
        if (!committee_text.empty()) spec.committee = parse_committee_list(committee_text);
        if (dist->count("--tau")) spec.tau = tau;
        spec.alpha = abcu::parse_rational(alpha_text);
        spec.beta = abcu::parse_rational(beta_text);
        spec.gen_p = abcu::parse_rational(gen_p_text);
        if (!menu_text.empty()) {
            std::stringstream stream(menu_text);
            std::string item;
            while (std::getline(stream, item, ',')) spec.gen_menu.push_back(item);
        }
        if (exec_text == "serial") spec.exec = abcu::Exec::serial;
        if (exec_text == "parallel") spec.exec = abcu::Exec::parallel;

        auto result = abcu::cli::run(spec);
        if (!result.stdout_override.empty()) {
            std::cout << result.stdout_override;
        } else if (spec.format == "json") {
            std::cout << result.body.dump(2) << "\n";
        } else {
            std::cout << abcu::cli::render_text(result.body);
        }
        return result.exit_code;
    } catch (const abcu::ResourceLimitError& e) {
        std::cerr << abcu::cli::error_record("resource-limit", e.what()) << "\n";
        return abcu::cli::kResourceLimit;
    } catch (const abcu::ValidationError& e) {
        std::cerr << abcu::cli::error_record("validation", e.what()) << "\n";
        return abcu::cli::kValidation;
    } catch (const std::exception& e) {
        std::cerr << abcu::cli::error_record("internal", e.what()) << "\n";
        return abcu::cli::kUsage;
    }
}
