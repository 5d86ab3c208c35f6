#include "alexpara/check.hpp"

#include <json.hpp>

namespace alexpara {

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::inapplicable: return "inapplicable";
    }
    return "?";
}

std::string CheckResult::to_json(int indent) const {
    nlohmann::ordered_json j;
    j["law"] = law_id;
    j["status"] = to_string(status);
    auto steps = nlohmann::ordered_json::array();
    for (const auto& s : witness) {
        nlohmann::ordered_json step;
        step["op"] = s.op;
        step["args"] = s.args;
        step["result"] = s.result;
        steps.push_back(step);
    }
    j["witness"] = steps;
    j["seed"] = seed;
    j["samples_used"] = samples_used;
    j["note"] = note;
    return j.dump(indent);
}

CheckResult make_result(std::string law_id, CheckStatus status, std::uint64_t seed,
                        std::size_t samples_used, std::string note) {
    CheckResult r;
    r.law_id = std::move(law_id);
    r.status = status;
    r.seed = seed;
    r.samples_used = samples_used;
    r.note = std::move(note);
    return r;
}

}  // namespace alexpara
