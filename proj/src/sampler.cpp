#include "choicepa/sampler.hpp"

#include <cmath>
#include <string>

#include "choicepa/errors.hpp"

namespace choicepa {

VertexId EndpointList::sample(RandomSource& rng) const {
    if (entries_.empty()) {
        throw PreconditionError("sample_endpoint: endpoint list is empty");
    }
    return entries_[rng.below(entries_.size())];
}

WeightIndex::WeightIndex(double alpha) : alpha_(alpha) {
    if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
        throw PreconditionError("weight index: alpha must be a finite nonnegative number");
    }
}

double WeightIndex::weight_for(std::uint32_t degree) const {
    if (alpha_ == 1.0) return static_cast<double>(degree);
    if (alpha_ == 0.0) return 1.0;
    if (degree > 1 && alpha_ * std::log2(static_cast<double>(degree)) >= 1000.0) {
        throw OverflowError("weight index: deg^alpha overflows (alpha=" + std::to_string(alpha_) +
                            ", degree=" + std::to_string(degree) + ")");
    }
    return std::pow(static_cast<double>(degree), alpha_);
}

double WeightIndex::weight(VertexId v) const {
    if (v >= count_) throw PreconditionError("weight index: unknown vertex " + std::to_string(v));
    return tree_[leaves_ + v];
}

void WeightIndex::grow() {
    const std::size_t new_leaves = leaves_ == 0 ? 16 : 2 * leaves_;
    std::vector<double> tree(2 * new_leaves, 0.0);
    for (std::size_t i = 0; i < count_; ++i) tree[new_leaves + i] = tree_[leaves_ + i];
    for (std::size_t i = new_leaves - 1; i >= 1; --i) tree[i] = tree[2 * i] + tree[2 * i + 1];
    tree_ = std::move(tree);
    leaves_ = new_leaves;
}

void WeightIndex::set_leaf(std::size_t leaf, double w) {
    std::size_t node = leaves_ + leaf;
    tree_[node] = w;
    for (node /= 2; node >= 1; node /= 2) tree_[node] = tree_[2 * node] + tree_[2 * node + 1];
}

VertexId WeightIndex::add_vertex(std::uint32_t degree) {
    const double w = weight_for(degree);
    if (count_ == leaves_) grow();
    const auto id = static_cast<VertexId>(count_++);
    set_leaf(id, w);
    return id;
}

void WeightIndex::update_weight(VertexId v, std::uint32_t new_degree) {
    if (v >= count_) throw PreconditionError("update_weight: unknown vertex " + std::to_string(v));
    set_leaf(v, weight_for(new_degree));
}

VertexId WeightIndex::sample(RandomSource& rng) const {
    const double total = total_weight();
    if (!(total > 0.0)) throw PreconditionError("sample_weighted: total weight is zero");
    double target = rng.uniform() * total;
    std::size_t node = 1;
    while (node < leaves_) {
        const double left = tree_[2 * node];
        if (target < left) {
            node = 2 * node;
        } else {
            target -= left;
            node = 2 * node + 1;
        }
    }
    auto v = static_cast<VertexId>(node - leaves_);
    // Rounding in the descent can land on a zero-weight padding leaf past the
    // last vertex; fall back to the last live vertex.
    while (tree_[leaves_ + v] == 0.0 && v > 0) --v;
    return v;
}

} // namespace choicepa
