#pragma once

#include <json.hpp>

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace cusplab {

using Json = nlohmann::ordered_json;

// One named verification step with its exact witness data.
struct Check {
    std::string name;
    bool pass = false;
    Json witness;
};

struct Report {
    std::string command;
    std::vector<Check> checks;

    void add(std::string name, bool pass, Json witness = Json::object()) {
        checks.push_back(Check{std::move(name), pass, std::move(witness)});
    }
    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// {"command": ..., "checks": [{"name","pass","witness"}...], "pass": ...};
// deterministic for fixed inputs, so no timing data lives here.
Json report_json(const Report& r);

// Line-oriented text: one line per check, then the overall verdict and wall
// time when supplied.
std::string report_text(const Report& r, std::optional<double> wall_ms = std::nullopt);

// Returns the number of bytes written.
std::size_t emit_report(const Report& r, bool as_json, std::ostream& out,
                        std::optional<double> wall_ms = std::nullopt);

Report report_from_json(const Json& j);

} // namespace cusplab
