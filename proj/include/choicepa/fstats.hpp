#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace choicepa {

inline constexpr std::uint32_t kDefaultKmax = 64;

/// Threshold weights F(k) = sum over vertices of deg(v) * [deg(v) >= k],
/// tracked for k = 1..kmax after j edges.
///
/// A strict vector refuses to track a vertex whose degree reaches kmax
/// (throws KmaxExceeded). A non-strict vector truncates instead: entries
/// k <= kmax stay exact, but the max degree can no longer be read off F.
class ThresholdVector {
public:
    ThresholdVector(std::uint32_t kmax = kDefaultKmax, bool strict = true);

    // The one-edge tree: F = [2, 0, ...], j = 1.
    static ThresholdVector initial(std::uint32_t kmax = kDefaultKmax, bool strict = true);

    std::uint32_t kmax() const { return static_cast<std::uint32_t>(values_.size()); }
    bool strict() const { return strict_; }
    std::uint64_t edges() const { return edges_; }

    // F(k) for 1 <= k; zero beyond kmax.
    std::uint64_t at(std::uint32_t k) const { return k >= 1 && k <= kmax() ? values_[k - 1] : 0; }
    std::span<const std::uint64_t> values() const { return values_; }

    // Largest k <= kmax with F(k) > 0.
    std::uint32_t top_level() const;

    bool operator==(const ThresholdVector& other) const {
        return edges_ == other.edges_ && values_ == other.values_;
    }

private:
    friend ThresholdVector compute_from_degrees(std::span<const std::uint32_t>, std::uint32_t, bool);
    friend void update_on_attach(ThresholdVector&, std::uint32_t);

    std::vector<std::uint64_t> values_;
    std::uint64_t edges_ = 0;
    bool strict_ = true;
};

/// Exact evaluation of the defining sum over a degree sequence.
ThresholdVector compute_from_degrees(std::span<const std::uint32_t> degrees,
                                     std::uint32_t kmax = kDefaultKmax, bool strict = true);

/// Applies one attachment to a vertex of old degree `chosen_degree`:
/// F(1) += 2, F(k) += 1 for 2 <= k <= D, F(D+1) += D+1, j += 1.
/// Throws PreconditionError if no vertex of degree >= D can exist, and
/// KmaxExceeded on a strict vector when D + 1 reaches kmax.
void update_on_attach(ThresholdVector& f, std::uint32_t chosen_degree);

/// One step of the vector-level chain for min-of-`choices` size-biased draws.
/// D = max{d >= 1 : u < (F(d) / 2j)^choices}; the half-open comparison makes
/// D a deterministic function of u. Returns D after applying the update.
std::uint32_t vector_chain_step(ThresholdVector& f, double u, std::uint32_t choices = 2);

/// F(k) / j for k = 1..kmax.
std::vector<double> empirical_alpha(const ThresholdVector& f);

struct DecayPoint {
    std::uint64_t edges;
    std::uint64_t weight; // F_j(k) at a fixed k
};

/// Least-squares slope of log(F_j(k) / 2j) against log j. Points with
/// F_j(k) = 0 carry no information on a log scale and are skipped.
/// Throws PreconditionError with fewer than 3 usable points.
double decay_trace(std::span<const DecayPoint> history);

} // namespace choicepa
