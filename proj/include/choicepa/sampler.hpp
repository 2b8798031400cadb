#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "choicepa/rng.hpp"

namespace choicepa {

using VertexId = std::uint32_t;

/// One entry per edge endpoint. A uniform pick over the entries returns
/// vertex v with probability deg(v) / 2m, which is exactly the size-biased
/// law of degree-proportional attachment.
class EndpointList {
public:
    EndpointList() = default;

    void record_edge(VertexId u, VertexId v) {
        entries_.push_back(u);
        entries_.push_back(v);
    }

    // Throws PreconditionError on an empty list.
    VertexId sample(RandomSource& rng) const;

    void reserve_edges(std::size_t edges) { entries_.reserve(2 * edges); }

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    std::span<const VertexId> entries() const { return entries_; }

private:
    std::vector<VertexId> entries_;
};

/// Dynamic weights w_v = deg(v)^alpha over a complete binary sum tree.
/// Every internal node is recomputed from its two children on update, so the
/// root never drifts from the sum of the leaves (no delta accumulation).
/// Sampling and updates are O(log n).
///
/// Weights are doubles; alpha * log2(degree) must stay below 1000 or the
/// update throws OverflowError.
class WeightIndex {
public:
    explicit WeightIndex(double alpha);

    double alpha() const { return alpha_; }
    std::size_t vertex_count() const { return count_; }
    double total_weight() const { return tree_.empty() ? 0.0 : tree_[1]; }
    double weight(VertexId v) const;

    // Appends a vertex with the given degree; its id is the previous count.
    VertexId add_vertex(std::uint32_t degree);

    // Throws PreconditionError for an unknown vertex.
    void update_weight(VertexId v, std::uint32_t new_degree);

    // Returns v with probability w_v / W. Throws PreconditionError if W == 0.
    VertexId sample(RandomSource& rng) const;

    // Raw weight for a degree under this index's exponent.
    double weight_for(std::uint32_t degree) const;

private:
    void grow();
    void set_leaf(std::size_t leaf, double w);

    double alpha_;
    std::size_t count_ = 0;
    std::size_t leaves_ = 0;   // power of two
    std::vector<double> tree_; // 1-based heap layout, size 2 * leaves_
};

} // namespace choicepa
