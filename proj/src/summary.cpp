#include "choicepa/summary.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

#include "choicepa/errors.hpp"
#include "choicepa/theory.hpp"
#include "choicepa/version.hpp"

namespace choicepa {

DegreeStats describe(std::vector<double> values) {
    if (values.empty()) throw PreconditionError("describe: empty sample");
    std::sort(values.begin(), values.end());
    DegreeStats s;
    s.count = values.size();
    double sum = 0;
    for (const auto v : values) sum += v;
    s.mean = sum / static_cast<double>(s.count);
    double ss = 0;
    for (const auto v : values) ss += (v - s.mean) * (v - s.mean);
    s.stddev = s.count > 1 ? std::sqrt(ss / static_cast<double>(s.count - 1)) : 0.0;
    s.min = values.front();
    s.max = values.back();
    auto quantile = [&](double q) {
        const double pos = q * static_cast<double>(s.count - 1);
        const auto lo = static_cast<std::size_t>(std::floor(pos));
        const auto hi = std::min(lo + 1, s.count - 1);
        return values[lo] + (pos - static_cast<double>(lo)) * (values[hi] - values[lo]);
    };
    s.q05 = quantile(0.05);
    s.q50 = quantile(0.50);
    s.q95 = quantile(0.95);
    return s;
}

nlohmann::json summarize(const std::vector<CheckpointRecord>& records, const std::optional<nlohmann::json>& config) {
    if (records.empty()) throw PreconditionError("summarize: no records");

    using Key = std::tuple<std::string, std::string, std::uint32_t, double, std::uint64_t>;
    std::map<Key, std::vector<const CheckpointRecord*>> groups;
    std::size_t kmax = 0;
    for (const auto& r : records) {
        groups[{r.run_id, r.model, r.choices, r.alpha, r.edges}].push_back(&r);
        kmax = std::max(kmax, r.f.size());
    }
    const auto alpha = theory::alpha_seq(static_cast<std::uint32_t>(std::max<std::size_t>(kmax, 1)));

    nlohmann::json checkpoints = nlohmann::json::array();
    for (const auto& [key, rows] : groups) {
        const auto& [run_id, model, d, a, j] = key;
        std::vector<double> deltas;
        deltas.reserve(rows.size());
        for (const auto* r : rows) deltas.push_back(r->max_degree);
        const auto stats = describe(deltas);

        std::size_t top = 0;
        for (const auto* r : rows) {
            for (std::size_t k = r->f.size(); k > top; --k) {
                if (r->f[k - 1] > 0) {
                    top = k;
                    break;
                }
            }
        }
        std::vector<double> mean_ratio(top, 0.0);
        for (const auto* r : rows) {
            for (std::size_t k = 0; k < top && k < r->f.size(); ++k) {
                mean_ratio[k] += static_cast<double>(r->f[k]) / static_cast<double>(j);
            }
        }
        for (auto& v : mean_ratio) v /= static_cast<double>(rows.size());

        nlohmann::json entry = {
            {"run_id", run_id},
            {"model", model},
            {"d", d},
            {"alpha", a},
            {"j", j},
            {"trials", stats.count},
            {"max_degree",
             {{"mean", stats.mean},
              {"stddev", stats.stddev},
              {"min", stats.min},
              {"max", stats.max},
              {"q05", stats.q05},
              {"q50", stats.q50},
              {"q95", stats.q95}}},
            {"mean_f_over_j", mean_ratio},
        };
        // alpha_k only describes the min-of-two rule with linear weights.
        if (model == "min" && d == 2 && a == 1.0) {
            std::vector<double> gap(mean_ratio.size());
            for (std::size_t k = 0; k < gap.size(); ++k) gap[k] = mean_ratio[k] - alpha[k];
            entry["alpha_gap"] = gap;
        }
        if (j >= 16) {
            const double ref = theory::reference_curve(static_cast<double>(j));
            entry["reference_curve"] = ref;
            entry["mean_minus_reference"] = stats.mean - ref;
        }
        checkpoints.push_back(std::move(entry));
    }

    nlohmann::json out = {{"version", kVersion}, {"checkpoints", checkpoints}};
    out["config"] = config ? *config : nlohmann::json(nullptr);
    out["seed"] = (config && config->contains("seed")) ? (*config)["seed"] : nlohmann::json(nullptr);
    return out;
}

} // namespace choicepa
