#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "otg/onthego.hpp"

namespace otg {

/// Raised on scenario parse or validation failures; the message names the
/// offending field or invariant.
class ScenarioError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A complete, validated run configuration as read from a scenario file.
struct Scenario {
    std::string name;
    std::string notes;  // free-form, e.g. layout provenance
    Box workspace;
    Vec eta;
    Vec start;
    Vec goal;
    std::vector<Obstacle> obstacles;
    std::optional<Box> spawn_region;
    RunConfig config;

    Environment environment() const;
    GridSpec grid() const { return GridSpec(workspace, eta); }
};

Scenario scenario_from_json(const nlohmann::json& j);
Scenario load_scenario(const std::filesystem::path& path);

/// Canonical serialization: defaults filled, keys sorted; load followed by
/// serialize is idempotent.
nlohmann::json to_json(const Scenario& sc);

/// Throws ScenarioError naming the violated invariant.
void validate(const Scenario& sc);

struct RunReport {
    RunStatus status = RunStatus::ReplanCapExceeded;
    int steps = 0;  // step-log record count (including the initial state)
    int replans = 0;
    double wall_seconds = 0.0;  // console-only, never serialized
    double path_length = 0.0;   // sum of hop distances over positions
    int env_versions = 0;
};

struct ExecuteOptions {
    std::filesystem::path out_dir = ".";
    std::optional<std::filesystem::path> frames_dir;
    std::optional<std::uint64_t> seed_override;
    std::optional<Schedule> schedule_override;
    bool write_files = true;
};

/// Serialize run artifacts (also used by the post-hoc audits).
std::string steps_to_jsonl(const RunOutcome& outcome);
nlohmann::json summary_to_json(const Scenario& sc, std::uint64_t seed, const RunOutcome& outcome,
                               const RunReport& report);

/// Run a scenario end to end: writes `<name>.steps.jsonl` and
/// `<name>.summary.json` into `out_dir`, plus one SVG frame per replan
/// boundary and a final frame when `frames_dir` is set. The summary and
/// logs are byte-deterministic for a fixed seed; wall-clock time is
/// reported only in the returned RunReport.
RunReport execute(const Scenario& sc, const ExecuteOptions& opts, RunOutcome* outcome_out = nullptr);

} // namespace otg
