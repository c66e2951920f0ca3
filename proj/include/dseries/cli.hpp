#pragma once

#include "dseries/blattner.hpp"
#include "dseries/rootdatum.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace dseries::cli {

enum class Format { json, tsv };

/// One job: a real form plus whatever parameters the command needs.
struct JobConfig {
    IntMatrix cartan;
    std::vector<bool> compact_simple;
    std::optional<Weight> lambda;
    std::optional<WeightBox> nu_box;
    std::optional<int> orbit_index;
    /// character: denominator | numerator | discrete | freudenthal
    std::optional<std::string> kind;
    std::optional<Format> format;
    bool verify = false;
    unsigned threads = 1;
};

/// Accepts "cartan" (integer matrix) or "system" (a preset name such as
/// "A2" or "A1xB2"); the canonical form always carries the matrix.
JobConfig parse_config(const nlohmann::json& j);
JobConfig load_config(const std::string& path);
nlohmann::json to_json(const JobConfig& config);

Format parse_format(const std::string& name);

/// "+,-", "c,n", "1,0" or "true,false": compact first.
std::vector<bool> parse_compact_flags(std::string_view text);

struct RunResult {
    int exit_code = 0;
    std::string output;
};

/// describe, orbits, kostant, schmid, character, blattner or verify.
/// Validation failures give exit 1, internal invariant failures exit 2; both
/// carry a JSON error object {"error": kind, "message": ...}.
RunResult run(const std::string& command, const JobConfig& config);

}  // namespace dseries::cli
