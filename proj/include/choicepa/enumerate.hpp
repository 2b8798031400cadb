#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <json.hpp>

#include "choicepa/model.hpp"

namespace choicepa {

inline constexpr std::uint32_t kMaxEnumerationEdges = 6;

// Degree multiset, sorted descending.
using DegreeMultiset = std::vector<std::uint32_t>;

struct ExactDistribution {
    std::uint32_t edges = 0;
    std::map<DegreeMultiset, double> multisets;
    std::map<std::uint32_t, double> max_degree;
    // F(1..Δ) with trailing zeros dropped.
    std::map<std::vector<std::uint64_t>, double> f_vectors;
};

/// Exact law of the tree after m_max edges, by dynamic programming over
/// degree multisets. From a multiset, the chosen degree D follows the
/// closed-form order-statistic law of `choices` independent draws with
/// single-draw tail T(k) = (sum over deg >= k of n_deg deg^alpha) / W:
///   min rule:  P(D >= k) = T(k)^d
///   max rule:  P(D <= k) = (1 - T(k+1))^d
///   classic:   P(D = k)  = T(k) - T(k+1)
/// The recursion never touches the simulator, which makes it an oracle for it.
/// Throws PreconditionError when m_max is 0 or above kMaxEnumerationEdges.
ExactDistribution enumerate_exact(std::uint32_t m_max, const ModelSpec& spec);

/// Law of the chosen degree D from a given multiset at edge count m (the
/// transition kernel used by enumerate_exact). Index d holds P(D = d).
std::vector<double> chosen_degree_law(const DegreeMultiset& degrees, const ModelSpec& spec);

DegreeMultiset canonical_multiset(std::span<const std::uint32_t> degrees);
std::vector<std::uint64_t> trimmed_f(std::span<const std::uint64_t> f);

nlohmann::json to_json(const ExactDistribution& dist);

} // namespace choicepa
