#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "choicepa/model.hpp"
#include "choicepa/records.hpp"

namespace choicepa {

struct CheckpointSchedule {
    double ratio = 1.5;                        // geometric: 10, 15, 23, ... , m_target
    std::vector<std::uint64_t> explicit_points; // overrides ratio when nonempty

    // Parses "geometric:R" or "list:a,b,c".
    static CheckpointSchedule parse(const std::string& text);
    std::string describe() const;
};

struct ExperimentConfig {
    ModelSpec model = ModelSpec::min_choice();
    std::uint64_t m_target = 1000;
    std::uint32_t trials = 1;
    std::uint64_t seed = 1;
    CheckpointSchedule checkpoints;
    std::uint32_t kmax = kDefaultKmax;
    // Unset: strict (abort on degree >= kmax) for min-choice, truncated F otherwise.
    std::optional<bool> strict_kmax;
    unsigned workers = 1;
    std::string run_id; // empty: derived from model and seed
    std::string csv_path;
    std::string summary_path;

    // Throws PreconditionError when an invariant fails.
    void validate() const;
    bool strict() const;
    std::string resolved_run_id() const;
};

/// Sorted, deduplicated edge counts at which records are taken. Geometric
/// schedules start at j = 10 and always end at m_target; points outside
/// [1, m_target] are dropped.
std::vector<std::uint64_t> checkpoint_edges(const ExperimentConfig& config);

/// Executes `trials` independent trials, trial t drawing from the stream
/// RandomSource(seed, t). Records come back sorted by (trial, j) and are
/// identical for any worker count. A failing trial rethrows its error
/// (lowest trial index first) after all workers stop.
std::vector<CheckpointRecord> run_trials(const ExperimentConfig& config);

nlohmann::json config_to_json(const ExperimentConfig& config);
// Missing keys keep their defaults. Throws PreconditionError on bad values.
ExperimentConfig config_from_json(const nlohmann::json& j);

} // namespace choicepa
