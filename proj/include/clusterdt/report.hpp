#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace clusterdt::report {

/// How a check's residual relates to its tolerance: deviation checks pass
/// when residual <= tolerance, margin checks when residual >= tolerance,
/// and flag checks encode pass/fail as residual 0/1 against tolerance 0.5.
enum class CheckKind { Deviation, Margin, Flag };

/// One verified quantity; see CheckKind for the pass semantics.
struct Check {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    CheckKind kind = CheckKind::Deviation;
};

/// Aggregated outcome of a command or a verification suite.  `pass` is
/// always the conjunction of the check passes.
struct Report {
    std::string command;
    std::string spec;
    bool pass = true;
    std::vector<Check> checks;
    std::uint64_t rng_seed = 0;
    std::string tool_version;
    std::vector<std::pair<std::string, double>> timings_ms;

    Report();
    Report(std::string command_name, std::string spec_name);

    void add_residual(std::string name, double residual, double tolerance);
    void add_margin(std::string name, double margin, double required);
    void add_flag(std::string name, bool ok);

    /// Append another report's checks, prefixing their names.
    void merge(const Report& other, const std::string& prefix);

    /// Rescale every deviation tolerance and margin requirement by a
    /// positive factor and recompute the passes.  Flags are unaffected.
    void scale_tolerances(double factor);

    nlohmann::ordered_json to_json(bool include_timings = true) const;

    /// Flat rows "spec,check,residual,tolerance,pass" without a header.
    std::string to_csv_rows() const;
    static std::string csv_header();
};

/// Fixed-width significand formatting used for all floats the tool
/// prints: 12 significant digits.
std::string format_double(double v);

} // namespace clusterdt::report
