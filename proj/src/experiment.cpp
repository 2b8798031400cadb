#include "choicepa/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <sstream>
#include <thread>

#include "choicepa/errors.hpp"

namespace choicepa {

CheckpointSchedule CheckpointSchedule::parse(const std::string& text) {
    CheckpointSchedule s;
    if (text.rfind("geometric:", 0) == 0) {
        try {
            std::size_t used = 0;
            const auto body = text.substr(10);
            s.ratio = std::stod(body, &used);
            if (used != body.size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw PreconditionError("checkpoints: bad ratio in '" + text + "'");
        }
        if (!(s.ratio > 1.0)) throw PreconditionError("checkpoints: geometric ratio must be > 1");
        return s;
    }
    if (text.rfind("list:", 0) == 0) {
        std::stringstream in(text.substr(5));
        std::string item;
        while (std::getline(in, item, ',')) {
            try {
                std::size_t used = 0;
                const auto v = std::stoull(item, &used);
                if (used != item.size()) throw std::invalid_argument("trailing");
                s.explicit_points.push_back(v);
            } catch (const std::exception&) {
                throw PreconditionError("checkpoints: bad list entry '" + item + "'");
            }
        }
        if (s.explicit_points.empty()) throw PreconditionError("checkpoints: empty list");
        return s;
    }
    throw PreconditionError("checkpoints: expected geometric:R or list:a,b,... (got '" + text + "')");
}

std::string CheckpointSchedule::describe() const {
    if (explicit_points.empty()) return "geometric:" + format_double(ratio);
    std::string out = "list:";
    for (std::size_t i = 0; i < explicit_points.size(); ++i) {
        out += (i ? "," : "") + std::to_string(explicit_points[i]);
    }
    return out;
}

void ExperimentConfig::validate() const {
    model.validate();
    if (trials < 1) throw PreconditionError("config: trials must be >= 1");
    if (m_target < 1) throw PreconditionError("config: edges must be >= 1");
    if (m_target > kMaxEdges) {
        throw OverflowError("config: edges " + std::to_string(m_target) + " exceeds the 32-bit id limit");
    }
    if (checkpoints.explicit_points.empty() && !(checkpoints.ratio > 1.0)) {
        throw PreconditionError("config: geometric ratio must be > 1");
    }
    if (kmax < 2) throw PreconditionError("config: kmax must be >= 2");
    if (workers < 1) throw PreconditionError("config: workers must be >= 1");
    if (run_id.find_first_of(",\n\r") != std::string::npos) {
        throw PreconditionError("config: run_id must not contain commas or newlines");
    }
}

bool ExperimentConfig::strict() const { return strict_kmax.value_or(model.rule == Rule::Min); }

std::string ExperimentConfig::resolved_run_id() const {
    if (!run_id.empty()) return run_id;
    std::string id(rule_name(model.rule));
    if (model.dgrow_coefficient) {
        id += "-dlog" + format_double(*model.dgrow_coefficient);
    } else {
        id += "-d" + std::to_string(model.rule == Rule::Classic ? 1u : model.choices);
    }
    id += "-a" + format_double(model.alpha) + "-s" + std::to_string(seed);
    return id;
}

std::vector<std::uint64_t> checkpoint_edges(const ExperimentConfig& config) {
    std::vector<std::uint64_t> points;
    if (!config.checkpoints.explicit_points.empty()) {
        for (const auto p : config.checkpoints.explicit_points) {
            if (p >= 1 && p <= config.m_target) points.push_back(p);
        }
    } else {
        double x = 10.0;
        while (x < static_cast<double>(config.m_target)) {
            points.push_back(static_cast<std::uint64_t>(std::ceil(x)));
            x *= config.checkpoints.ratio;
        }
    }
    points.push_back(config.m_target);
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return points;
}

namespace {

std::vector<CheckpointRecord> run_one(const ExperimentConfig& config, const std::vector<std::uint64_t>& points,
                                      std::uint32_t trial, const std::string& run_id) {
    using clock = std::chrono::steady_clock;
    std::vector<CheckpointRecord> out;
    out.reserve(points.size());
    RandomSource rng(config.seed, trial);
    auto tree = TreeState::init(config.model.alpha);
    auto last = clock::now();
    const std::string model(rule_name(config.model.rule));

    Observer obs{points, [&](const Snapshot& s) {
                     const auto now = clock::now();
                     CheckpointRecord r;
                     r.run_id = run_id;
                     r.model = model;
                     r.choices = config.model.choices_at(s.edges);
                     r.alpha = config.model.alpha;
                     r.trial = trial;
                     r.edges = s.edges;
                     r.max_degree = s.max_degree;
                     r.f.assign(s.f.values().begin(), s.f.values().end());
                     r.wall_ns = static_cast<std::uint64_t>(
                         std::chrono::duration_cast<std::chrono::nanoseconds>(now - last).count());
                     last = now;
                     out.push_back(std::move(r));
                 }};
    grow(tree, config.model, config.m_target, rng, std::span<const Observer>(&obs, 1),
         GrowOptions{config.kmax, config.strict()});
    return out;
}

} // namespace

std::vector<CheckpointRecord> run_trials(const ExperimentConfig& config) {
    config.validate();
    const auto points = checkpoint_edges(config);
    const auto run_id = config.resolved_run_id();
    std::vector<std::vector<CheckpointRecord>> per_trial(config.trials);
    std::vector<std::exception_ptr> errors(config.trials);
    std::atomic<std::uint32_t> next{0};

    auto worker = [&] {
        for (auto t = next.fetch_add(1); t < config.trials; t = next.fetch_add(1)) {
            try {
                per_trial[t] = run_one(config, points, t, run_id);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        }
    };
    const unsigned n = std::min<unsigned>(config.workers, config.trials);
    if (n <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(n);
        for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }

    std::vector<CheckpointRecord> records;
    for (auto& trial : per_trial) {
        for (auto& r : trial) records.push_back(std::move(r));
    }
    return records;
}

nlohmann::json config_to_json(const ExperimentConfig& c) {
    nlohmann::json j = {
        {"model", std::string(rule_name(c.model.rule))},
        {"choices", c.model.rule == Rule::Classic ? 1u : c.model.choices},
        {"alpha", c.model.alpha},
        {"edges", c.m_target},
        {"trials", c.trials},
        {"seed", c.seed},
        {"checkpoints", c.checkpoints.describe()},
        {"kmax", c.kmax},
        {"strict_kmax", c.strict()},
        {"run_id", c.resolved_run_id()},
    };
    j["dgrow_A"] = c.model.dgrow_coefficient ? nlohmann::json(*c.model.dgrow_coefficient) : nlohmann::json(nullptr);
    return j;
}

ExperimentConfig config_from_json(const nlohmann::json& j) {
    ExperimentConfig c;
    try {
        if (j.contains("model")) c.model.rule = parse_rule(j.at("model").get<std::string>());
        if (j.contains("choices")) c.model.choices = j.at("choices").get<std::uint32_t>();
        if (c.model.rule == Rule::Classic) c.model.choices = 1;
        if (j.contains("alpha")) c.model.alpha = j.at("alpha").get<double>();
        if (j.contains("dgrow_A") && !j.at("dgrow_A").is_null()) c.model.dgrow_coefficient = j.at("dgrow_A").get<double>();
        if (j.contains("edges")) c.m_target = j.at("edges").get<std::uint64_t>();
        if (j.contains("trials")) c.trials = j.at("trials").get<std::uint32_t>();
        if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("checkpoints")) c.checkpoints = CheckpointSchedule::parse(j.at("checkpoints").get<std::string>());
        if (j.contains("kmax")) c.kmax = j.at("kmax").get<std::uint32_t>();
        if (j.contains("strict_kmax")) c.strict_kmax = j.at("strict_kmax").get<bool>();
        if (j.contains("workers")) c.workers = j.at("workers").get<unsigned>();
        if (j.contains("run_id")) c.run_id = j.at("run_id").get<std::string>();
        if (j.contains("out")) c.csv_path = j.at("out").get<std::string>();
        if (j.contains("summary")) c.summary_path = j.at("summary").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw PreconditionError(std::string("config: ") + e.what());
    }
    return c;
}

} // namespace choicepa
