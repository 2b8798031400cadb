#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "choicepa/fstats.hpp"
#include "choicepa/rng.hpp"

namespace choicepa {

/// Two-choice balls-and-bins. levels()[k] = number of bins holding at least
/// k balls, for k = 0..max_load()+1; levels()[0] == n.
class BinsState {
public:
    explicit BinsState(std::uint32_t bins);

    std::uint32_t bins() const { return static_cast<std::uint32_t>(loads_.size()); }
    std::uint64_t balls() const { return balls_; }
    std::span<const std::uint32_t> loads() const { return loads_; }
    std::span<const std::uint64_t> levels() const { return levels_; }
    std::uint64_t level(std::uint32_t k) const { return k < levels_.size() ? levels_[k] : 0; }
    std::uint32_t max_load() const { return static_cast<std::uint32_t>(levels_.size() - 2); }

    // Drops a ball into bin b.
    void add_ball(std::uint32_t b);

private:
    std::vector<std::uint32_t> loads_;
    std::vector<std::uint64_t> levels_; // always ends with a trailing zero
    std::uint64_t balls_ = 0;
};

/// Two bins drawn independently and uniformly; the ball goes to the less
/// loaded one, with one fair coin draw when the loads are equal.
void place_two_choice(BinsState& state, RandomSource& rng);

/// Level counts recomputed from scratch from per-bin loads.
std::vector<std::uint64_t> levels_from_loads(std::span<const std::uint32_t> loads);

/// Level-count chain: L = max{l >= 0 : u < (N(l)/n)^2}, then N(L+1) += 1.
/// `levels` must satisfy levels[0] == n; it is extended as needed.
/// Returns L, the load of the selected bin before the ball lands.
std::uint32_t level_chain_step(std::vector<std::uint64_t>& levels, std::uint64_t bins, double u);

struct CouplingReport {
    std::uint64_t edges = 0;
    std::uint64_t bins = 0;
    std::uint64_t seed = 0;
    std::uint64_t checks = 0;     // (j, k) pairs compared
    std::uint64_t violations = 0; // always zero on return; a violation throws
    std::uint32_t tree_max_degree = 0;
    std::uint32_t bins_max_load = 0;
};

/// Runs the threshold-vector chain (min of two size-biased draws) and the
/// two-choice level chain with n = 2m bins side by side, both driven by the
/// same uniform at every step, and checks N_j(k) <= F_j(k) for every k >= 1
/// after every step j = 1..m. The first ball and the first edge are
/// deterministic (N_1 = [n, 1], F_1 = [2]); steps j -> j+1 consume U_j.
/// Throws CouplingViolation with a state dump if domination fails.
CouplingReport coupled_run(std::uint64_t edges, std::uint64_t seed, std::uint32_t kmax = kDefaultKmax);

} // namespace choicepa
