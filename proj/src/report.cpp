#include "clusterdt/report.hpp"

#include <cstdio>

#include "clusterdt/version.hpp"

namespace clusterdt::report {

namespace {

// Round through the printed representation so serialized values match the
// human-readable output digit for digit.
double round_sig(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return std::strtod(buf, nullptr);
}

} // namespace

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

Report::Report() : tool_version(std::string(kToolName) + " " + kToolVersion) {}

Report::Report(std::string command_name, std::string spec_name) : Report() {
    command = std::move(command_name);
    spec = std::move(spec_name);
}

void Report::add_residual(std::string name, double residual, double tolerance) {
    bool ok = residual <= tolerance;
    checks.push_back(Check{std::move(name), residual, tolerance, ok, CheckKind::Deviation});
    pass = pass && ok;
}

void Report::add_margin(std::string name, double margin, double required) {
    bool ok = margin >= required;
    checks.push_back(Check{std::move(name), margin, required, ok, CheckKind::Margin});
    pass = pass && ok;
}

void Report::add_flag(std::string name, bool ok) {
    checks.push_back(Check{std::move(name), ok ? 0.0 : 1.0, 0.5, ok, CheckKind::Flag});
    pass = pass && ok;
}

void Report::merge(const Report& other, const std::string& prefix) {
    for (const Check& c : other.checks) {
        checks.push_back(Check{prefix + c.name, c.residual, c.tolerance, c.pass, c.kind});
    }
    for (const auto& [name, ms] : other.timings_ms) {
        timings_ms.emplace_back(prefix + name, ms);
    }
    pass = pass && other.pass;
}

void Report::scale_tolerances(double factor) {
    pass = true;
    for (Check& c : checks) {
        switch (c.kind) {
        case CheckKind::Deviation:
            c.tolerance *= factor;
            c.pass = c.residual <= c.tolerance;
            break;
        case CheckKind::Margin:
            c.tolerance *= factor;
            c.pass = c.residual >= c.tolerance;
            break;
        case CheckKind::Flag:
            break;
        }
        pass = pass && c.pass;
    }
}

nlohmann::ordered_json Report::to_json(bool include_timings) const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["spec"] = spec;
    j["pass"] = pass;
    j["checks"] = nlohmann::ordered_json::array();
    for (const Check& c : checks) {
        nlohmann::ordered_json jc;
        jc["name"] = c.name;
        jc["residual"] = round_sig(c.residual);
        jc["tolerance"] = round_sig(c.tolerance);
        jc["pass"] = c.pass;
        j["checks"].push_back(jc);
    }
    j["rng_seed"] = rng_seed;
    j["tool_version"] = tool_version;
    if (include_timings) {
        nlohmann::ordered_json jt = nlohmann::ordered_json::object();
        for (const auto& [name, ms] : timings_ms) jt[name] = round_sig(ms);
        j["timings"] = jt;
    }
    return j;
}

std::string Report::csv_header() { return "type,check,residual,tolerance,pass"; }

std::string Report::to_csv_rows() const {
    std::string out;
    for (const Check& c : checks) {
        out += spec;
        out += ',';
        out += c.name;
        out += ',';
        out += format_double(c.residual);
        out += ',';
        out += format_double(c.tolerance);
        out += ',';
        out += c.pass ? "true" : "false";
        out += '\n';
    }
    return out;
}

} // namespace clusterdt::report
