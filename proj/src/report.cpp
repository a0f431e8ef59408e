#include "cusplab/report.hpp"

#include <sstream>

#include "cusplab/errors.hpp"

namespace cusplab {

Json report_json(const Report& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks)
        checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
    return Json{{"command", r.command}, {"checks", checks}, {"pass", r.pass()}};
}

std::string report_text(const Report& r, std::optional<double> wall_ms) {
    std::ostringstream out;
    out << "# " << r.command << "\n";
    for (const auto& c : r.checks) {
        out << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
        if (!c.witness.is_null() && !(c.witness.is_object() && c.witness.empty()))
            out << "  " << c.witness.dump();
        out << "\n";
    }
    out << (r.pass() ? "OK" : "FAILED") << "  (" << r.checks.size() << " checks)";
    if (wall_ms) out << "  [" << *wall_ms << " ms]";
    out << "\n";
    return out.str();
}

std::size_t emit_report(const Report& r, bool as_json, std::ostream& out,
                        std::optional<double> wall_ms) {
    std::string payload = as_json ? report_json(r).dump(2) + "\n" : report_text(r, wall_ms);
    out << payload;
    if (!out) throw io_error("failed to write report");
    return payload.size();
}

Report report_from_json(const Json& j) {
    Report r;
    r.command = j.at("command").get<std::string>();
    for (const auto& c : j.at("checks")) {
        Check ch;
        ch.name = c.at("name").get<std::string>();
        ch.pass = c.at("pass").get<bool>();
        ch.witness = c.at("witness");
        r.checks.push_back(std::move(ch));
    }
    return r;
}

} // namespace cusplab
