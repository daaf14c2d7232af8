#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "abcu/models.hpp"
#include "abcu/oracle.hpp"

namespace abcu::cli {

// Exit codes are part of the interface: scripts distinguish bad input,
// blown enumeration caps and oracle disagreement.
enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kValidation = 2,
    kResourceLimit = 3,
    kMismatch = 4,
};

struct RunSpec {
    std::string command;
    std::string instance_path;
    std::optional<std::vector<int>> committee;
    std::optional<int> tau;

    Rational alpha{1, 2};
    Rational beta{1, 2};

    EnumerationLimits limits;
    Exec exec = Exec::automatic;
    std::string format = "text";  // text | json

    std::string verify_op = "all";  // oracle-verify: all|prob|dist|poss|nec|exists-nec|maxswm|expected

    // gen
    std::string gen_kind = "lottery";
    Instance gen_instance{3, 3, 2};
    std::uint64_t seed = 0;
    int gen_supports = 3;
    int gen_entries = 4;
    int gen_max_uncertain = -1;
    std::vector<std::string> gen_menu;  // probability strings
    bool gen_unrobust = false;
    Rational gen_p{1, 2};
    std::string out_path;

    // bench
    std::string bench_dir;
};

struct ResultDocument {
    nlohmann::ordered_json body;
    int exit_code = kOk;
    std::string stdout_override;  // non-empty: print this instead of the body (gen to stdout)
};

ResultDocument run(const RunSpec& spec);

// key = value lines, nested objects indented; arrays inline.
std::string render_text(const nlohmann::ordered_json& body);

// One-line machine-parseable error record for standard error.
std::string error_record(const std::string& kind, const std::string& message);

}  // namespace abcu::cli
