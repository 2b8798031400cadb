#include "choicepa/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "choicepa/errors.hpp"

namespace choicepa {

std::string_view rule_name(Rule rule) {
    switch (rule) {
    case Rule::Min: return "min";
    case Rule::Max: return "max";
    case Rule::Classic: return "classic";
    }
    return "unknown";
}

Rule parse_rule(std::string_view name) {
    if (name == "min") return Rule::Min;
    if (name == "max") return Rule::Max;
    if (name == "classic") return Rule::Classic;
    throw PreconditionError("unknown model rule '" + std::string(name) + "' (expected min|max|classic)");
}

void ModelSpec::validate() const {
    if (choices < 1) throw PreconditionError("model: choices must be >= 1");
    if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw PreconditionError("model: alpha must be >= 0");
    if (dgrow_coefficient && !(*dgrow_coefficient > 0.0)) {
        throw PreconditionError("model: d-growth coefficient must be > 0");
    }
}

std::uint32_t ModelSpec::choices_at(std::uint64_t edges) const {
    if (rule == Rule::Classic) return 1;
    if (!dgrow_coefficient) return choices;
    const double d = std::floor(*dgrow_coefficient * std::log(static_cast<double>(edges)));
    return d < 1.0 ? 1u : static_cast<std::uint32_t>(d);
}

TreeState TreeState::init(double alpha, bool track_parents) {
    TreeState s;
    s.alpha_ = alpha;
    s.edges_ = 1;
    s.max_degree_ = 1;
    s.degrees_ = {1, 1};
    s.track_parents_ = track_parents;
    if (track_parents) s.parents_ = {kNoParent, 0};
    if (alpha == 1.0) {
        s.endpoints_.record_edge(0, 1);
    } else {
        s.weights_.emplace(alpha);
        s.weights_->add_vertex(1);
        s.weights_->add_vertex(1);
    }
    return s;
}

void TreeState::reserve(std::uint64_t edges) {
    degrees_.reserve(edges + 1);
    if (track_parents_) parents_.reserve(edges + 1);
    if (!weights_) endpoints_.reserve_edges(edges);
}

VertexId TreeState::sample_candidate(RandomSource& rng) const {
    return weights_ ? weights_->sample(rng) : endpoints_.sample(rng);
}

void TreeState::attach(VertexId target) {
    const auto leaf = static_cast<VertexId>(degrees_.size());
    const auto deg = ++degrees_[target];
    degrees_.push_back(1);
    if (track_parents_) parents_.push_back(target);
    if (weights_) {
        weights_->update_weight(target, deg);
        weights_->add_vertex(1);
    } else {
        endpoints_.record_edge(leaf, target);
    }
    max_degree_ = std::max(max_degree_, deg);
    ++edges_;
}

StepResult step(TreeState& state, const ModelSpec& spec, RandomSource& rng) {
    const std::uint32_t d = spec.choices_at(state.edges());
    VertexId chosen = state.sample_candidate(rng);
    if (d > 1) {
        thread_local std::vector<VertexId> candidates;
        candidates.resize(d);
        candidates[0] = chosen;
        for (std::uint32_t i = 1; i < d; ++i) candidates[i] = state.sample_candidate(rng);

        const bool want_min = spec.rule != Rule::Max;
        std::uint32_t best = state.degree(candidates[0]);
        std::uint32_t ties = 1;
        for (std::uint32_t i = 1; i < d; ++i) {
            const auto deg = state.degree(candidates[i]);
            if (deg == best) {
                ++ties;
            } else if (want_min ? deg < best : deg > best) {
                best = deg;
                ties = 1;
                chosen = candidates[i];
            }
        }
        if (ties > 1) {
            auto pick = rng.below(ties);
            for (std::uint32_t i = 0; i < d; ++i) {
                if (state.degree(candidates[i]) == best && pick-- == 0) {
                    chosen = candidates[i];
                    break;
                }
            }
        }
    }
    const StepResult result{chosen, state.degree(chosen)};
    state.attach(chosen);
    return result;
}

void grow(TreeState& state, const ModelSpec& spec, std::uint64_t m_target, RandomSource& rng,
          std::span<const Observer> observers, const GrowOptions& options) {
    spec.validate();
    if (m_target > kMaxEdges) {
        throw OverflowError("grow: m_target " + std::to_string(m_target) + " exceeds the 32-bit id limit " +
                            std::to_string(kMaxEdges));
    }
    if (m_target < state.edges()) {
        throw PreconditionError("grow: m_target " + std::to_string(m_target) + " is below the current edge count " +
                                std::to_string(state.edges()));
    }
    if (spec.alpha != state.alpha()) {
        throw PreconditionError("grow: model alpha does not match the tree's sampler");
    }
    state.reserve(m_target);

    std::vector<std::size_t> next(observers.size(), 0);
    for (std::size_t i = 0; i < observers.size(); ++i) {
        const auto& cps = observers[i].checkpoints;
        next[i] = static_cast<std::size_t>(std::lower_bound(cps.begin(), cps.end(), state.edges()) - cps.begin());
    }
    const bool tracking = !observers.empty();
    std::optional<ThresholdVector> f;
    if (tracking) f = compute_from_degrees(state.degrees(), options.kmax, options.strict_kmax);

    auto notify = [&] {
        for (std::size_t i = 0; i < observers.size(); ++i) {
            const auto& cps = observers[i].checkpoints;
            if (next[i] < cps.size() && cps[next[i]] == state.edges()) {
                observers[i].callback(Snapshot{state.edges(), state.max_degree(), *f});
                ++next[i];
            }
        }
    };

    if (tracking) notify();
    while (state.edges() < m_target) {
        const auto r = step(state, spec, rng);
        if (tracking) {
            update_on_attach(*f, r.old_degree);
            notify();
        }
    }
}

} // namespace choicepa
