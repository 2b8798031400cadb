#include "choicepa/ballsbins.hpp"

#include <algorithm>
#include <sstream>

#include "choicepa/errors.hpp"

namespace choicepa {

BinsState::BinsState(std::uint32_t bins) : loads_(bins, 0), levels_{bins, 0} {
    if (bins == 0) throw PreconditionError("bins: need at least one bin");
}

void BinsState::add_ball(std::uint32_t b) {
    const auto load = ++loads_[b];
    if (load + 1 >= levels_.size()) levels_.push_back(0);
    ++levels_[load];
    ++balls_;
}

void place_two_choice(BinsState& state, RandomSource& rng) {
    const auto a = static_cast<std::uint32_t>(rng.below(state.bins()));
    const auto b = static_cast<std::uint32_t>(rng.below(state.bins()));
    const auto la = state.loads()[a];
    const auto lb = state.loads()[b];
    std::uint32_t target;
    if (la < lb) {
        target = a;
    } else if (lb < la) {
        target = b;
    } else {
        target = rng.below(2) == 0 ? a : b;
    }
    state.add_ball(target);
}

std::vector<std::uint64_t> levels_from_loads(std::span<const std::uint32_t> loads) {
    const std::uint32_t top = loads.empty() ? 0 : *std::max_element(loads.begin(), loads.end());
    std::vector<std::uint64_t> levels(top + 2, 0);
    for (const auto load : loads) {
        for (std::uint32_t k = 0; k <= load; ++k) ++levels[k];
    }
    return levels;
}

std::uint32_t level_chain_step(std::vector<std::uint64_t>& levels, std::uint64_t bins, double u) {
    if (levels.empty() || levels[0] != bins) {
        throw PreconditionError("level_chain_step: N(0) must equal the bin count");
    }
    const double n = static_cast<double>(bins);
    std::uint32_t l = 0;
    while (l + 1 < levels.size()) {
        const double share = static_cast<double>(levels[l + 1]) / n;
        if (!(u < share * share)) break;
        ++l;
    }
    if (l + 2 > levels.size()) levels.resize(l + 2, 0);
    ++levels[l + 1];
    if (levels.back() != 0) levels.push_back(0);
    return l;
}

namespace {

[[noreturn]] void report_violation(std::uint64_t j, std::uint32_t k, const std::vector<std::uint64_t>& levels,
                                   const ThresholdVector& f) {
    std::ostringstream out;
    out << "coupled_run: N_j(k) > F_j(k) at j=" << j << " k=" << k << "; N=[";
    for (std::size_t i = 0; i < levels.size(); ++i) out << (i ? "," : "") << levels[i];
    out << "] F=[";
    for (std::uint32_t i = 1; i <= f.top_level() + 1 && i <= f.kmax(); ++i) out << (i > 1 ? "," : "") << f.at(i);
    out << "]";
    throw CouplingViolation(out.str());
}

} // namespace

CouplingReport coupled_run(std::uint64_t edges, std::uint64_t seed, std::uint32_t kmax) {
    if (edges < 1) throw PreconditionError("coupled_run: need at least one edge");
    CouplingReport report;
    report.edges = edges;
    report.bins = 2 * edges;
    report.seed = seed;

    RandomSource rng(seed);
    auto f = ThresholdVector::initial(kmax, true);
    std::vector<std::uint64_t> levels{report.bins, 1, 0};

    auto check = [&](std::uint64_t j) {
        for (std::uint32_t k = 1; k < levels.size(); ++k) {
            ++report.checks;
            if (levels[k] > f.at(k)) {
                ++report.violations;
                report_violation(j, k, levels, f);
            }
        }
    };

    check(1);
    for (std::uint64_t j = 1; j < edges; ++j) {
        const double u = rng.uniform();
        vector_chain_step(f, u, 2);
        level_chain_step(levels, report.bins, u);
        check(j + 1);
    }
    report.tree_max_degree = f.top_level();
    report.bins_max_load = static_cast<std::uint32_t>(levels.size() - 2);
    return report;
}

} // namespace choicepa
