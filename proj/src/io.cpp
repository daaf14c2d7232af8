#include "abcu/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "abcu/errors.hpp"

namespace abcu {

namespace {

using nlohmann::ordered_json;

Rational parse_probability_field(const ordered_json& value, const std::string& where) {
    if (value.is_string()) return parse_rational(value.get<std::string>());
    if (value.is_number_integer()) return Rational(value.get<long>());
    if (value.is_number_float())
        throw ValidationError(where +
                              ": write probabilities as strings (\"0.35\" or \"7/20\"); JSON "
                              "floats are not exact");
    throw ValidationError(where + ": expected a probability string");
}

CandidateSet parse_set(const ordered_json& value, const std::string& where) {
    if (!value.is_array()) throw ValidationError(where + ": expected an array of candidate indices");
    std::vector<int> members;
    for (const auto& item : value) {
        if (!item.is_number_integer())
            throw ValidationError(where + ": candidate indices must be integers");
        members.push_back(item.get<int>());
    }
    return CandidateSet(std::move(members));
}

ordered_json set_to_json(const CandidateSet& set) {
    ordered_json out = ordered_json::array();
    for (int c : set) out.push_back(c);
    return out;
}

}  // namespace

UncertaintyModel parse_instance(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("instance is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ValidationError("instance must be a JSON object");
    for (const char* field : {"model", "n", "m", "k"}) {
        if (!doc.contains(field))
            throw ValidationError(std::string("instance is missing field '") + field + "'");
    }
    if (!doc["model"].is_string()) throw ValidationError("field 'model' must be a string");
    for (const char* field : {"n", "m", "k"}) {
        if (!doc[field].is_number_integer())
            throw ValidationError(std::string("field '") + field + "' must be an integer");
    }

    Instance inst{doc["n"].get<int>(), doc["m"].get<int>(), doc["k"].get<int>()};
    const std::string kind = doc["model"].get<std::string>();

    UncertaintyModel model = [&]() -> UncertaintyModel {
        if (kind == "joint") {
            if (!doc.contains("entries") || !doc["entries"].is_array())
                throw ValidationError("joint instance needs an 'entries' array");
            JointProbabilityModel joint{inst, {}};
            std::size_t index = 0;
            for (const auto& item : doc["entries"]) {
                ++index;
                std::string where = "entry " + std::to_string(index);
                if (!item.is_object() || !item.contains("prob") || !item.contains("profile"))
                    throw ValidationError(where + " needs 'prob' and 'profile'");
                JointEntry entry;
                entry.probability = parse_probability_field(item["prob"], where);
                if (!item["profile"].is_array())
                    throw ValidationError(where + ": 'profile' must be an array of candidate lists");
                std::size_t voter = 0;
                for (const auto& set : item["profile"])
                    entry.profile.push_back(
                        parse_set(set, where + " voter " + std::to_string(++voter)));
                joint.entries.push_back(std::move(entry));
            }
            return joint;
        }
        if (kind == "lottery") {
            if (!doc.contains("voters") || !doc["voters"].is_array())
                throw ValidationError("lottery instance needs a 'voters' array");
            LotteryModel lottery{inst, {}};
            std::size_t voter = 0;
            for (const auto& dist : doc["voters"]) {
                ++voter;
                std::string who = "voter " + std::to_string(voter);
                if (!dist.is_array()) throw ValidationError(who + ": expected a support array");
                std::vector<LotterySupport> supports;
                std::size_t index = 0;
                for (const auto& item : dist) {
                    ++index;
                    std::string where = who + " support " + std::to_string(index);
                    if (!item.is_object() || !item.contains("prob") || !item.contains("set"))
                        throw ValidationError(where + " needs 'prob' and 'set'");
                    supports.push_back({parse_probability_field(item["prob"], where),
                                        parse_set(item["set"], where)});
                }
                lottery.voters.push_back(std::move(supports));
            }
            canonicalize(lottery);
            return lottery;
        }
        if (kind == "candidate_prob" || kind == "3va") {
            if (!doc.contains("p") || !doc["p"].is_array())
                throw ValidationError("candidate-probability instance needs a 'p' matrix");
            CandidateProbabilityModel cp;
            cp.instance = inst;
            cp.three_valued = (kind == "3va");
            std::size_t voter = 0;
            for (const auto& row : doc["p"]) {
                ++voter;
                if (!row.is_array())
                    throw ValidationError("voter " + std::to_string(voter) +
                                          ": matrix row must be an array");
                std::vector<Rational> cells;
                std::size_t candidate = 0;
                for (const auto& cell : row) {
                    ++candidate;
                    cells.push_back(parse_probability_field(
                        cell, "voter " + std::to_string(voter) + " candidate " +
                                  std::to_string(candidate)));
                }
                cp.p.push_back(std::move(cells));
            }
            return cp;
        }
        throw ValidationError("unknown model kind '" + kind + "'");
    }();

    require_valid(model);
    return model;
}

UncertaintyModel load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open instance file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_instance(buffer.str());
}

std::string serialize_instance(const UncertaintyModel& model) {
    const Instance& inst = instance_of(model);
    ordered_json doc;
    doc["model"] = model_kind(model);
    doc["n"] = inst.voters;
    doc["m"] = inst.candidates;
    doc["k"] = inst.committee_size;

    if (const auto* joint = std::get_if<JointProbabilityModel>(&model)) {
        ordered_json entries = ordered_json::array();
        for (const auto& entry : joint->entries) {
            ordered_json profile = ordered_json::array();
            for (const auto& set : entry.profile) profile.push_back(set_to_json(set));
            entries.push_back({{"prob", to_fraction_string(entry.probability)},
                               {"profile", std::move(profile)}});
        }
        doc["entries"] = std::move(entries);
    } else if (const auto* lottery = std::get_if<LotteryModel>(&model)) {
        ordered_json voters = ordered_json::array();
        for (const auto& dist : lottery->voters) {
            ordered_json supports = ordered_json::array();
            for (const auto& support : dist)
                supports.push_back({{"prob", to_fraction_string(support.probability)},
                                    {"set", set_to_json(support.set)}});
            voters.push_back(std::move(supports));
        }
        doc["voters"] = std::move(voters);
    } else {
        const auto& cp = std::get<CandidateProbabilityModel>(model);
        ordered_json matrix = ordered_json::array();
        for (const auto& row : cp.p) {
            ordered_json cells = ordered_json::array();
            for (const auto& cell : row) cells.push_back(to_fraction_string(cell));
            matrix.push_back(std::move(cells));
        }
        doc["p"] = std::move(matrix);
    }
    return doc.dump(2) + "\n";
}

void save_instance(const UncertaintyModel& model, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write instance file '" + path + "'");
    out << serialize_instance(model);
}

}  // namespace abcu
