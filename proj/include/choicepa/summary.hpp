#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "choicepa/records.hpp"

namespace choicepa {

struct DegreeStats {
    std::size_t count = 0;
    double mean = 0, stddev = 0;
    double min = 0, max = 0;
    double q05 = 0, q50 = 0, q95 = 0;
};

// Linear-interpolation quantiles over the sample. Throws PreconditionError on empty input.
DegreeStats describe(std::vector<double> values);

/// Aggregates records per (run_id, model, d, alpha, j): max-degree statistics,
/// mean F(k)/j, the gap to alpha_k, and the gap to ln ln j / ln 2 (j >= 16).
/// `config` is echoed verbatim when given. Throws PreconditionError on empty input.
nlohmann::json summarize(const std::vector<CheckpointRecord>& records,
                         const std::optional<nlohmann::json>& config = std::nullopt);

} // namespace choicepa
