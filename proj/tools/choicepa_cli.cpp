// choicepa: command-line driver for the limited-choice preferential
// attachment simulator.
//
//   choicepa simulate  --model min --edges 1000000 --trials 32 --seed 7 --out run.csv
//   choicepa couple    --edges 100000 --seed 3
//   choicepa theory    --m 1e6 --kmax 20
//   choicepa enumerate --edges 3 --model min
//   choicepa summarize --in run.csv

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "choicepa/ballsbins.hpp"
#include "choicepa/enumerate.hpp"
#include "choicepa/errors.hpp"
#include "choicepa/experiment.hpp"
#include "choicepa/records.hpp"
#include "choicepa/summary.hpp"
#include "choicepa/theory.hpp"
#include "choicepa/version.hpp"

using namespace choicepa;
using nlohmann::json;

namespace {

void emit_error(const std::string& kind, const std::string& message) {
    std::cerr << json{{"error", kind}, {"message", message}}.dump() << '\n';
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text << '\n';
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << text << '\n';
    if (!out) throw IoError("write failed for '" + path + "'");
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw IoError("config '" + path + "': " + e.what());
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Limited-choice preferential attachment simulator"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    // simulate
    auto* sim = app.add_subcommand("simulate", "Run seeded Monte Carlo trials and write checkpoint CSV");
    std::string config_path, model_name = "min", checkpoints = "geometric:1.5", out_path, summary_path, run_id;
    std::uint32_t choices = 2, trials = 1, kmax = kDefaultKmax;
    double alpha = 1.0, dgrow = 0.0;
    std::uint64_t edges = 1000, seed = 1;
    unsigned workers = 1;
    bool truncate_f = false;
    sim->add_option("--config", config_path, "JSON config; flags given explicitly override it");
    auto* o_model = sim->add_option("--model", model_name, "min | max | classic");
    auto* o_choices = sim->add_option("--choices", choices, "Number of candidates d");
    auto* o_alpha = sim->add_option("--alpha", alpha, "Attachment exponent (weights deg^alpha)");
    auto* o_dgrow = sim->add_option("--dgrow-A", dgrow, "Use d(m) = max(1, floor(A ln m))");
    auto* o_edges = sim->add_option("--edges", edges, "Target edge count m");
    auto* o_trials = sim->add_option("--trials", trials, "Independent trials");
    auto* o_seed = sim->add_option("--seed", seed, "Base seed");
    auto* o_cp = sim->add_option("--checkpoints", checkpoints, "geometric:R or list:a,b,...");
    auto* o_kmax = sim->add_option("--kmax", kmax, "Tracked threshold levels");
    auto* o_workers = sim->add_option("--workers", workers, "Worker threads (does not affect output)");
    auto* o_runid = sim->add_option("--run-id", run_id, "Run identifier for the CSV");
    auto* o_out = sim->add_option("--out", out_path, "CSV output path (default stdout)");
    auto* o_summary = sim->add_option("--summary", summary_path, "Summary JSON output path");
    auto* o_trunc = sim->add_flag("--truncate-f", truncate_f, "Allow degrees beyond kmax (F truncated)");

    // couple
    auto* couple = app.add_subcommand("couple", "Coupled threshold-vector / balls-and-bins run");
    std::uint64_t couple_edges = 100000, couple_seed = 1;
    std::uint32_t couple_seeds = 1;
    couple->add_option("--edges", couple_edges, "Edge target m (n = 2m bins)");
    couple->add_option("--seed", couple_seed, "First seed");
    couple->add_option("--seeds", couple_seeds, "Number of consecutive seeds");

    // theory
    auto* th = app.add_subcommand("theory", "Emit recurrence constants as JSON");
    double theory_m = 1e6;
    std::uint32_t theory_kmax = 20;
    th->add_option("--m", theory_m, "Edge count for k_*, phi and the reference curve");
    th->add_option("--kmax", theory_kmax, "Number of alpha_k terms");

    // enumerate
    auto* en = app.add_subcommand("enumerate", "Exact distribution for small m");
    std::uint32_t enum_edges = 3, enum_choices = 2;
    std::string enum_model = "min";
    double enum_alpha = 1.0;
    en->add_option("--edges", enum_edges, "m <= 6");
    en->add_option("--model", enum_model, "min | max | classic");
    en->add_option("--choices", enum_choices, "Number of candidates d");
    en->add_option("--alpha", enum_alpha, "Attachment exponent");

    // summarize
    auto* su = app.add_subcommand("summarize", "Summarize a checkpoint CSV");
    std::string summarize_in, summarize_out;
    su->add_option("--in", summarize_in, "CSV produced by simulate")->required();
    su->add_option("--out", summarize_out, "JSON output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit_error("usage", e.what());
        return 2;
    }

    try {
        if (sim->parsed()) {
            ExperimentConfig cfg;
            if (!config_path.empty()) cfg = config_from_json(read_json_file(config_path));
            if (o_model->count()) cfg.model.rule = parse_rule(model_name);
            if (o_choices->count()) cfg.model.choices = choices;
            if (cfg.model.rule == Rule::Classic) cfg.model.choices = 1;
            if (o_alpha->count()) cfg.model.alpha = alpha;
            if (o_dgrow->count()) cfg.model.dgrow_coefficient = dgrow;
            if (o_edges->count()) cfg.m_target = edges;
            if (o_trials->count()) cfg.trials = trials;
            if (o_seed->count()) cfg.seed = seed;
            if (o_cp->count()) cfg.checkpoints = CheckpointSchedule::parse(checkpoints);
            if (o_kmax->count()) cfg.kmax = kmax;
            if (o_workers->count()) cfg.workers = workers;
            if (o_runid->count()) cfg.run_id = run_id;
            if (o_out->count()) cfg.csv_path = out_path;
            if (o_summary->count()) cfg.summary_path = summary_path;
            if (o_trunc->count()) cfg.strict_kmax = false;

            const auto records = run_trials(cfg);
            if (cfg.csv_path.empty() || cfg.csv_path == "-") {
                write_csv(std::cout, records, cfg.kmax);
            } else {
                write_csv_file(cfg.csv_path, records, cfg.kmax);
            }
            if (!cfg.summary_path.empty()) {
                write_text(cfg.summary_path, summarize(records, config_to_json(cfg)).dump(2));
            }
        } else if (couple->parsed()) {
            json reports = json::array();
            for (std::uint32_t i = 0; i < couple_seeds; ++i) {
                const auto r = coupled_run(couple_edges, couple_seed + i);
                reports.push_back({{"edges", r.edges},
                                   {"bins", r.bins},
                                   {"seed", r.seed},
                                   {"checks", r.checks},
                                   {"violations", r.violations},
                                   {"tree_max_level", r.tree_max_degree},
                                   {"bins_max_load", r.bins_max_load}});
            }
            std::cout << json{{"version", kVersion}, {"runs", reports}}.dump(2) << '\n';
        } else if (th->parsed()) {
            std::cout << theory::to_json(theory::make_table(theory_m, theory_kmax)).dump(2) << '\n';
        } else if (en->parsed()) {
            ModelSpec spec{parse_rule(enum_model), enum_choices, enum_alpha, std::nullopt};
            if (spec.rule == Rule::Classic) spec.choices = 1;
            std::cout << to_json(enumerate_exact(enum_edges, spec)).dump(2) << '\n';
        } else if (su->parsed()) {
            write_text(summarize_out, summarize(read_csv_file(summarize_in)).dump(2));
        }
    } catch (const Error& e) {
        emit_error(e.kind(), e.what());
        return e.kind() == "kmax_exceeded" ? 3 : 1;
    } catch (const std::exception& e) {
        emit_error("internal", e.what());
        return 1;
    }
    return 0;
}
