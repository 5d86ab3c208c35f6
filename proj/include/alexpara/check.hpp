#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace alexpara {

enum class CheckStatus { pass, fail, inapplicable };

std::string to_string(CheckStatus s);

/// One replayable oracle call: op name, arguments, observed result.
/// Ops: "leq" a b -> "true"/"false"; "mul" a b -> c; "inv" a -> b;
/// "eq" a b -> "true"/"false"; "member:<subset>" a -> "true"/"false".
struct TraceStep {
    std::string op;
    std::vector<std::string> args;
    std::string result;
};

/// Outcome of one law check. A fail always carries a witness trace that can
/// be re-verified against the raw oracle.
struct CheckResult {
    std::string law_id;
    CheckStatus status = CheckStatus::inapplicable;
    std::vector<TraceStep> witness;
    std::uint64_t seed = 0;
    std::size_t samples_used = 0;
    std::string note;

    bool passed() const { return status == CheckStatus::pass; }
    std::string to_json(int indent = -1) const;
};

CheckResult make_result(std::string law_id, CheckStatus status, std::uint64_t seed,
                        std::size_t samples_used, std::string note = "");

}  // namespace alexpara
