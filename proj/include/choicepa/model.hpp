#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "choicepa/fstats.hpp"
#include "choicepa/rng.hpp"
#include "choicepa/sampler.hpp"

namespace choicepa {

enum class Rule { Min, Max, Classic };

std::string_view rule_name(Rule rule);
Rule parse_rule(std::string_view name); // "min" | "max" | "classic"

// Largest supported edge count; vertex ids are 32-bit and there are m + 1 vertices.
inline constexpr std::uint64_t kMaxEdges = (std::uint64_t{1} << 31) - 2;

struct ModelSpec {
    Rule rule = Rule::Min;
    std::uint32_t choices = 2;
    double alpha = 1.0;
    // When set, the number of choices before a step at edge count m is
    // max(1, floor(A * ln m)) instead of `choices`.
    std::optional<double> dgrow_coefficient;

    static ModelSpec min_choice(std::uint32_t d = 2) { return {Rule::Min, d, 1.0, std::nullopt}; }
    static ModelSpec max_choice(std::uint32_t d = 2) { return {Rule::Max, d, 1.0, std::nullopt}; }
    static ModelSpec classic() { return {Rule::Classic, 1, 1.0, std::nullopt}; }

    // Throws PreconditionError on d < 1, alpha < 0, or A <= 0. Classic forces d = 1.
    void validate() const;
    std::uint32_t choices_at(std::uint64_t edges) const;
};

/// Evolving attachment tree. Vertex ids are dense in arrival order; v1, v2
/// (ids 0 and 1) are the initial pair. Degree-proportional draws come from an
/// endpoint list when alpha == 1 and from a WeightIndex otherwise.
class TreeState {
public:
    // The one-edge tree P1.
    static TreeState init(double alpha = 1.0, bool track_parents = false);

    std::uint64_t edges() const { return edges_; }
    std::size_t vertex_count() const { return degrees_.size(); }
    std::uint32_t max_degree() const { return max_degree_; }
    double alpha() const { return alpha_; }
    std::uint32_t degree(VertexId v) const { return degrees_[v]; }
    std::span<const std::uint32_t> degrees() const { return degrees_; }

    // Attachment target of each vertex; vertex 0 has kNoParent. Empty unless
    // parents were requested at init.
    static constexpr VertexId kNoParent = ~VertexId{0};
    std::span<const VertexId> parents() const { return parents_; }

    const EndpointList* endpoints() const { return weights_ ? nullptr : &endpoints_; }
    const WeightIndex* weights() const { return weights_ ? &*weights_ : nullptr; }

    // One degree-biased draw (deg^alpha / W).
    VertexId sample_candidate(RandomSource& rng) const;

    // Adds a new leaf attached to `target`.
    void attach(VertexId target);

    void reserve(std::uint64_t edges);

private:
    TreeState() = default;

    double alpha_ = 1.0;
    std::uint64_t edges_ = 0;
    std::uint32_t max_degree_ = 0;
    std::vector<std::uint32_t> degrees_;
    std::vector<VertexId> parents_;
    bool track_parents_ = false;
    EndpointList endpoints_;
    std::optional<WeightIndex> weights_;
};

struct StepResult {
    VertexId vertex;
    std::uint32_t old_degree;
};

/// One growth step. Draw order per step is fixed: d candidate draws, then one
/// tie-break draw only when two or more candidates share the selected degree.
StepResult step(TreeState& state, const ModelSpec& spec, RandomSource& rng);

struct Snapshot {
    std::uint64_t edges;
    std::uint32_t max_degree;
    ThresholdVector f;
};

struct Observer {
    std::vector<std::uint64_t> checkpoints; // edge counts, ascending
    std::function<void(const Snapshot&)> callback;
};

struct GrowOptions {
    std::uint32_t kmax = kDefaultKmax;
    bool strict_kmax = true;
};

/// Steps until edges() == m_target, handing each observer an immutable
/// snapshot at every checkpoint in (current m, m_target]; a checkpoint equal to
/// the starting edge count fires before the first step.
void grow(TreeState& state, const ModelSpec& spec, std::uint64_t m_target, RandomSource& rng,
          std::span<const Observer> observers = {}, const GrowOptions& options = {});

inline std::uint32_t max_degree(const TreeState& state) { return state.max_degree(); }

inline ThresholdVector compute_from_degrees(const TreeState& state, std::uint32_t kmax = kDefaultKmax,
                                            bool strict = true) {
    return compute_from_degrees(state.degrees(), kmax, strict);
}

} // namespace choicepa
