#include "choicepa/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "choicepa/errors.hpp"

namespace choicepa {

DegreeMultiset canonical_multiset(std::span<const std::uint32_t> degrees) {
    DegreeMultiset out(degrees.begin(), degrees.end());
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::vector<std::uint64_t> trimmed_f(std::span<const std::uint64_t> f) {
    std::vector<std::uint64_t> out(f.begin(), f.end());
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<double> chosen_degree_law(const DegreeMultiset& degrees, const ModelSpec& spec) {
    const std::uint32_t top = degrees.empty() ? 0 : degrees.front();
    std::uint64_t total_degree = 0;
    for (const auto d : degrees) total_degree += d;
    const std::uint32_t choices = spec.choices_at(total_degree / 2);

    // tail[k] = single-draw probability of degree >= k, k = 0..top+1.
    std::vector<double> mass(top + 2, 0.0);
    for (const auto d : degrees) mass[d] += std::pow(static_cast<double>(d), spec.alpha);
    std::vector<double> tail(top + 2, 0.0);
    for (std::uint32_t k = top + 1; k-- > 0;) tail[k] = mass[k] + (k + 1 < tail.size() ? tail[k + 1] : 0.0);
    const double total = tail[0];
    for (auto& t : tail) t /= total;

    std::vector<double> law(top + 1, 0.0);
    const double c = static_cast<double>(choices);
    for (std::uint32_t d = 1; d <= top; ++d) {
        switch (spec.rule) {
        case Rule::Classic: law[d] = tail[d] - tail[d + 1]; break;
        case Rule::Min: law[d] = std::pow(tail[d], c) - std::pow(tail[d + 1], c); break;
        case Rule::Max: law[d] = std::pow(1.0 - tail[d + 1], c) - std::pow(1.0 - tail[d], c); break;
        }
    }
    return law;
}

ExactDistribution enumerate_exact(std::uint32_t m_max, const ModelSpec& spec) {
    spec.validate();
    if (m_max < 1 || m_max > kMaxEnumerationEdges) {
        throw PreconditionError("enumerate_exact: edges must be in [1, " + std::to_string(kMaxEnumerationEdges) +
                                "] (got " + std::to_string(m_max) + ")");
    }
    std::map<DegreeMultiset, double> layer{{DegreeMultiset{1, 1}, 1.0}};
    for (std::uint32_t m = 1; m < m_max; ++m) {
        std::map<DegreeMultiset, double> next;
        for (const auto& [ms, p] : layer) {
            const auto law = chosen_degree_law(ms, spec);
            for (std::uint32_t d = 1; d < law.size(); ++d) {
                if (law[d] <= 0.0) continue;
                auto child = ms;
                *std::find(child.begin(), child.end(), d) += 1;
                child.push_back(1);
                std::sort(child.begin(), child.end(), std::greater<>());
                next[child] += p * law[d];
            }
        }
        layer = std::move(next);
    }

    ExactDistribution out;
    out.edges = m_max;
    for (const auto& [ms, p] : layer) {
        out.multisets[ms] = p;
        out.max_degree[ms.front()] += p;
        const auto f = compute_from_degrees(ms, ms.front() + 2, true);
        out.f_vectors[trimmed_f(f.values())] += p;
    }
    return out;
}

nlohmann::json to_json(const ExactDistribution& dist) {
    nlohmann::json ms = nlohmann::json::array();
    for (const auto& [k, p] : dist.multisets) ms.push_back({{"degrees", k}, {"p", p}});
    nlohmann::json md = nlohmann::json::array();
    for (const auto& [k, p] : dist.max_degree) md.push_back({{"max_degree", k}, {"p", p}});
    nlohmann::json fv = nlohmann::json::array();
    for (const auto& [k, p] : dist.f_vectors) fv.push_back({{"f", k}, {"p", p}});
    return {{"edges", dist.edges}, {"multisets", ms}, {"max_degree", md}, {"f_vectors", fv}};
}

} // namespace choicepa
