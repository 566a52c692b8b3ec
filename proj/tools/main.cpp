// bellorbit command line: bounds, orbit tables, game values, simulations,
// figure sweeps, and the frozen-value verification report.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bellorbit/game.hpp"
#include "bellorbit/reference.hpp"

namespace {

using namespace bellorbit;
using nlohmann::json;

constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

std::string sig(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
    return buf;
}

// Round to 12 significant digits so JSON serialization is stable and short.
double jnum(double v) { return std::strtod(sig(v, 12).c_str(), nullptr); }

std::string compact(const std::vector<int>& xs) {
    bool digits = true;
    for (int x : xs) digits = digits && x >= 0 && x < 10;
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!digits && i > 0) out += '-';
        out += std::to_string(xs[i]);
    }
    return out;
}

struct RunConfig {
    std::string preset;
    int parties = 0;
    int n = 0;
    int d = 0;
    std::string orbits_path;
    std::string format = "text";
    std::string out;
    int label = -1;
    long long cap = kDefaultStrategyCap;
    int threads = 1;
    std::uint64_t seed = 0;
    long long rounds = 100000;
    std::string transcript;
    std::string strategy = "quantum";
    std::string mode = "odd";
    int grid = 50;
    bool check_violation = false;
    double tolerance = -1.0;
    bool json_flag = false;
};

Preset resolve_preset(const RunConfig& cfg) {
    if (cfg.preset == "four-party" || cfg.preset == "three-party") {
        if (cfg.parties || cfg.n || cfg.d || !cfg.orbits_path.empty()) {
            throw DomainError("preset '" + cfg.preset +
                              "' does not accept --parties/--n/--d/--orbits");
        }
        return cfg.preset == "four-party" ? four_party_preset() : three_party_preset();
    }
    if (cfg.preset == "bipartite") {
        if (cfg.n < 2 || cfg.d < 2) throw DomainError("preset 'bipartite' requires --n and --d");
        if (cfg.parties != 0 && cfg.parties != 2) {
            throw DomainError("preset 'bipartite' has exactly 2 parties");
        }
        return bipartite_preset(cfg.n, cfg.d);
    }
    if (!cfg.preset.empty()) throw DomainError("unknown preset '" + cfg.preset + "'");

    if (cfg.parties < 2 || cfg.n < 2 || cfg.d < 2) {
        throw DomainError("give --preset, or --parties/--n/--d (each at least 2)");
    }
    if (!cfg.orbits_path.empty()) {
        const Scenario sc{cfg.parties, cfg.n, cfg.d};
        sc.validate();
        std::ifstream in(cfg.orbits_path);
        if (!in) throw DomainError("cannot open orbit file '" + cfg.orbits_path + "'");
        return Preset{"file:" + cfg.orbits_path, sc, parse_orbit_reps(in, sc)};
    }
    if (cfg.parties != 2) throw DomainError("--orbits is required when --parties > 2");
    return bipartite_preset(cfg.n, cfg.d);
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw DomainError("cannot open output file '" + cfg.out + "'");
    f << text;
}

json scenario_json(const Scenario& sc) {
    return {{"parties", sc.parties}, {"outcomes", sc.outcomes}, {"settings", sc.settings}};
}

// ---------------------------------------------------------------- bounds ---

int cmd_bounds(const RunConfig& cfg) {
    const Preset preset = resolve_preset(cfg);
    const BoundsReport report =
        bounds_report(preset.scenario, preset.reps, cfg.cap, cfg.threads);
    const double ratio = report.quantum_full / static_cast<double>(report.classical);

    if (cfg.label >= 0 && cfg.label >= preset.scenario.group_order()) {
        throw DomainError("--label out of range");
    }
    double label_value = 0.0;
    if (cfg.label >= 0) {
        const GramBound gb = quantum_bound_gram(gram_blocks(preset.scenario, preset.reps),
                                                preset.scenario.group_order());
        // per_label is ordered by block; blocks cover labels with nonempty
        // eigenspace in increasing order, so index by position.
        const std::vector<GramBlock> blocks = gram_blocks(preset.scenario, preset.reps);
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            if (blocks[i].label == cfg.label) label_value = gb.per_label[i];
        }
    }

    if (cfg.format == "json") {
        json j;
        j["preset"] = preset.name;
        j["scenario"] = scenario_json(preset.scenario);
        j["events"] = report.event_count;
        j["classical"] = report.classical;
        j["classical_witness"] = report.classical_witness;
        j["quantum_full"] = jnum(report.quantum_full);
        j["quantum_gram"] = jnum(report.quantum_gram);
        j["route_delta"] = jnum(report.route_delta);
        j["best_labels"] = report.best_labels;
        json per = json::array();
        for (double v : report.per_label) per.push_back(jnum(v));
        j["per_label"] = per;
        j["violation_ratio"] = jnum(ratio);
        if (cfg.label >= 0) j["label_value"] = jnum(label_value);
        emit(cfg, j.dump(2) + "\n");
        return 0;
    }

    std::ostringstream os;
    os << "scenario: parties=" << preset.scenario.parties << " n=" << preset.scenario.outcomes
       << " d=" << preset.scenario.settings << " (" << preset.name << ")\n";
    os << "events: " << report.event_count << "\n";
    os << "classical bound: " << report.classical << "\n";
    os << "quantum bound (full): " << sig(report.quantum_full, 6) << "\n";
    os << "quantum bound (gram): " << sig(report.quantum_gram, 6) << "\n";
    os << "route delta: " << sig(report.route_delta, 6) << "\n";
    os << "best labels:";
    for (int l : report.best_labels) os << " " << l;
    os << "\n";
    if (cfg.label >= 0) {
        os << "label " << cfg.label << " value: " << sig(label_value, 6) << "\n";
    }
    os << "violation ratio: " << sig(ratio, 6) << "\n";
    emit(cfg, os.str());
    return 0;
}

// ---------------------------------------------------------------- orbits ---

int cmd_orbits(const RunConfig& cfg) {
    const Preset preset = resolve_preset(cfg);
    const NonlocalGame game = game_from_orbits(preset.scenario, preset.reps);

    if (cfg.format == "json") {
        json j = game_to_json(game);
        j["preset"] = preset.name;
        emit(cfg, j.dump(2) + "\n");
        return 0;
    }
    std::ostringstream os;
    if (cfg.format == "csv") {
        os << "orbit,question,win\n";
        for (const GameRow& row : game.rows) {
            os << row.orbit << "," << compact(row.question) << ",";
            for (std::size_t i = 0; i < row.win.size(); ++i) {
                os << (i ? "|" : "") << compact(row.win[i]);
            }
            os << "\n";
        }
    } else {
        os << "orbit  question  winning outcomes\n";
        for (const GameRow& row : game.rows) {
            os << row.orbit << "      " << compact(row.question) << "  ";
            for (std::size_t i = 0; i < row.win.size(); ++i) {
                os << (i ? "," : "") << compact(row.win[i]);
            }
            os << "\n";
        }
    }
    emit(cfg, os.str());
    return 0;
}

// ------------------------------------------------------------------ game ---

int cmd_game_value(const RunConfig& cfg) {
    const Preset preset = resolve_preset(cfg);
    const NonlocalGame game = game_from_orbits(preset.scenario, preset.reps);
    const ClassicalGameValue classical = classical_game_value(game, cfg.cap, cfg.threads);
    const QuantumBound qb = quantum_bound_full(bell_operator(preset.scenario, preset.reps));
    const double quantum = quantum_game_value(game, QuantumStrategy{qb.optimal_state});

    if (cfg.format == "json") {
        json j;
        j["preset"] = preset.name;
        j["scenario"] = scenario_json(preset.scenario);
        j["rows"] = game.rows.size();
        j["classical_value"] = jnum(classical.value);
        j["classical_rows_won"] = classical.rows_won;
        j["classical_witness"] = classical.witness.answers;
        j["quantum_value"] = jnum(quantum);
        j["quantum_bell_sum"] = jnum(quantum * static_cast<double>(game.rows.size()));
        emit(cfg, j.dump(2) + "\n");
        return 0;
    }
    std::ostringstream os;
    os << "rows: " << game.rows.size() << "\n";
    os << "classical value: " << sig(classical.value, 6) << " (" << classical.rows_won << "/"
       << game.rows.size() << " rows)\n";
    os << "quantum value: " << sig(quantum, 6) << "\n";
    emit(cfg, os.str());
    return 0;
}

int cmd_game_simulate(const RunConfig& cfg) {
    const Preset preset = resolve_preset(cfg);
    const NonlocalGame game = game_from_orbits(preset.scenario, preset.reps);
    if (cfg.rounds <= 0) throw DomainError("--rounds must be positive");

    std::ofstream transcript;
    std::ostream* tout = nullptr;
    if (!cfg.transcript.empty()) {
        transcript.open(cfg.transcript, std::ios::binary);
        if (!transcript) {
            throw DomainError("cannot open transcript file '" + cfg.transcript + "'");
        }
        tout = &transcript;
    }

    SimulationResult res;
    double exact = 0.0;
    if (cfg.strategy == "classical") {
        const ClassicalGameValue classical = classical_game_value(game, cfg.cap, cfg.threads);
        exact = classical.value;
        res = simulate(game, classical.witness, cfg.rounds, cfg.seed, tout);
    } else if (cfg.strategy == "quantum") {
        const QuantumBound qb = quantum_bound_full(bell_operator(preset.scenario, preset.reps));
        const QuantumStrategy qs{qb.optimal_state};
        exact = quantum_game_value(game, qs);
        res = simulate(game, qs, cfg.rounds, cfg.seed, tout);
    } else {
        throw DomainError("--strategy must be quantum or classical");
    }

    if (cfg.format == "json") {
        json j;
        j["preset"] = preset.name;
        j["strategy"] = cfg.strategy;
        j["seed"] = cfg.seed;
        j["rounds"] = res.rounds;
        j["wins"] = res.wins;
        j["win_frequency"] = jnum(res.win_frequency);
        j["standard_error"] = jnum(res.standard_error);
        j["exact_value"] = jnum(exact);
        if (!cfg.transcript.empty()) j["transcript"] = cfg.transcript;
        emit(cfg, j.dump(2) + "\n");
        return 0;
    }
    std::ostringstream os;
    os << "strategy: " << cfg.strategy << "\n";
    os << "rounds: " << res.rounds << "  wins: " << res.wins << "\n";
    os << "win frequency: " << sig(res.win_frequency, 6) << " +/- "
       << sig(res.standard_error, 6) << "\n";
    os << "exact value: " << sig(exact, 6) << "\n";
    if (!cfg.transcript.empty()) os << "transcript: " << cfg.transcript << "\n";
    emit(cfg, os.str());
    return 0;
}

// ----------------------------------------------------------------- sweep ---

int cmd_sweep(const RunConfig& cfg) {
    if (cfg.grid < 2) throw DomainError("--grid must be at least 2");
    std::ostringstream os;
    bool violated = false;

    if (cfg.mode == "figure3") {
        os << "x,f_limit,f_one_third\n";
        for (int i = 1; i <= cfg.grid; ++i) {
            const double x = 0.5 * i / cfg.grid;
            os << sig(x, 12) << "," << sig(f_limit(x), 12) << "," << sig(f_one_third(x), 12)
               << "\n";
        }
    } else if (cfg.mode == "odd" || cfg.mode == "even") {
        const double ymax = cfg.mode == "odd" ? 1.0 / 3.0 : 0.5;
        os << "x,y,f,g\n";
        for (int i = 1; i <= cfg.grid; ++i) {
            const double x = 0.5 * i / cfg.grid;
            for (int j = 1; j <= cfg.grid; ++j) {
                const double y = ymax * j / cfg.grid;
                const double f = cfg.mode == "odd" ? f_odd(x, y) : f_even(x, y);
                const double g = g_plane(x);
                violated = violated || !(f > g);
                os << sig(x, 12) << "," << sig(y, 12) << "," << sig(f, 12) << ","
                   << sig(g, 12) << "\n";
            }
        }
    } else {
        throw DomainError("--mode must be odd, even, or figure3");
    }

    emit(cfg, os.str());
    if (cfg.check_violation && violated) {
        std::cerr << "violation check failed: f <= g at some grid point\n";
        return kExitVerify;
    }
    return 0;
}

// ---------------------------------------------------------- verify-paper ---

struct Check {
    std::string name;
    double expected = 0.0;
    double computed = 0.0;
    double tolerance = 0.0;
};

int cmd_verify_paper(const RunConfig& cfg) {
    std::vector<Check> checks;
    const auto add = [&](std::string name, double expected, double computed, double tol) {
        checks.push_back({std::move(name), expected, computed, tol});
    };

    // Bipartite family: exact classical bounds and the closed form.
    for (const auto& [n, d] : std::vector<std::pair<int, int>>{
             {2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {4, 2}}) {
        const Preset bip = bipartite_preset(n, d);
        std::vector<Event> events;
        for (const OrbitRep& rep : bip.reps) {
            for (Event& ev : orbit_events(bip.scenario, rep)) events.push_back(std::move(ev));
        }
        const ClassicalResult c = classical_bound(bip.scenario, events, cfg.cap, cfg.threads);
        add("bipartite_classical_n" + std::to_string(n) + "_d" + std::to_string(d),
            2.0 * d - 1.0, static_cast<double>(c.max_count), 0.0);
    }
    double grid_delta = 0.0;
    for (int n = 2; n <= 7; ++n) {
        for (int d = 2; d <= 6; ++d) {
            const Preset bip = bipartite_preset(n, d);
            const double full = quantum_bound_full(bell_operator(bip.scenario, bip.reps)).value;
            grid_delta = std::max(grid_delta, std::abs(full - closed_form_bipartite(n, d)));
        }
    }
    add("bipartite_closed_form_grid_delta", 0.0, grid_delta, 1e-8);
    add("chsh_quantum", 2.0 + std::sqrt(2.0),
        quantum_bound_full(bell_operator(bipartite_preset(2, 2).scenario,
                                         bipartite_preset(2, 2).reps))
            .value,
        1e-9);

    // Four-party construction.
    {
        const Preset four = four_party_preset();
        const std::vector<GramBlock> blocks = gram_blocks(four.scenario, four.reps);
        const GramBlock* b2 = nullptr;
        for (const GramBlock& b : blocks) {
            if (b.label == 2) b2 = &b;
        }
        const double gram_delta =
            b2 ? (256.0 * b2->m - reference::four_party_gram_256()).cwiseAbs().maxCoeff()
               : 1e9;
        add("four_party_gram_delta", 0.0, gram_delta, 1e-9);
        add("four_party_gram_44", 44.0 / 256.0, b2 ? b2->m(0, 0).real() : 0.0, 1e-9);
        const double lambda =
            b2 ? hermitian_eig((256.0 * b2->m).eval()).values.maxCoeff() : 0.0;
        add("four_party_lambda_256M", 64.667, lambda, 5e-3);

        const BoundsReport report = bounds_report(four.scenario, four.reps, cfg.cap, cfg.threads);
        add("four_party_quantum", 2.021, report.quantum_full, 1e-3);
        add("four_party_classical", 2.0, static_cast<double>(report.classical), 0.0);
        add("four_party_best_label", 2.0,
            report.best_labels.empty() ? -1.0 : static_cast<double>(report.best_labels.front()),
            0.0);
        add("four_party_route_delta", 0.0, report.route_delta, 1e-8);

        const NonlocalGame game = game_from_orbits(four.scenario, four.reps);
        add("four_party_game_classical", 2.0 / 12.0,
            classical_game_value(game, cfg.cap, cfg.threads).value, 1e-12);
        add("four_party_game_quantum", 0.1684,
            quantum_game_value(game, QuantumStrategy{report.optimal_state}), 1e-3);

        std::set<std::pair<std::string, std::set<std::string>>> rows;
        for (const GameRow& row : game.rows) {
            std::set<std::string> wins;
            for (const auto& o : row.win) wins.insert(compact(o));
            rows.insert({compact(row.question), std::move(wins)});
        }
        add("four_party_table_match", 1.0,
            rows == reference::four_party_table() ? 1.0 : 0.0, 0.0);
    }

    // Three-party construction.
    {
        const Preset three = three_party_preset();
        const std::vector<GramBlock> blocks = gram_blocks(three.scenario, three.reps);
        const GramBlock* b2 = nullptr;
        for (const GramBlock& b : blocks) {
            if (b.label == 2) b2 = &b;
        }
        const double gram_delta =
            b2 ? (64.0 * b2->m - reference::three_party_gram_64()).cwiseAbs().maxCoeff() : 1e9;
        add("three_party_gram_delta", 0.0, gram_delta, 1e-9);
        const double lambda =
            b2 ? hermitian_eig((64.0 * b2->m).eval()).values.maxCoeff() : 0.0;
        add("three_party_lambda_64M", 16.597, lambda, 5e-3);

        const BoundsReport report =
            bounds_report(three.scenario, three.reps, cfg.cap, cfg.threads);
        add("three_party_quantum", 2.075, report.quantum_full, 1e-3);
        add("three_party_classical", 2.0, static_cast<double>(report.classical), 0.0);
        add("three_party_route_delta", 0.0, report.route_delta, 1e-8);

        const NonlocalGame game = game_from_orbits(three.scenario, three.reps);
        add("three_party_game_classical", 2.0 / 8.0,
            classical_game_value(game, cfg.cap, cfg.threads).value, 1e-12);
        add("three_party_game_quantum", 0.2594,
            quantum_game_value(game, QuantumStrategy{report.optimal_state}), 1e-3);

        std::set<std::pair<std::string, std::set<std::string>>> rows;
        for (const GameRow& row : game.rows) {
            std::set<std::string> wins;
            for (const auto& o : row.win) wins.insert(compact(o));
            rows.insert({compact(row.question), std::move(wins)});
        }
        add("three_party_table_match", 1.0,
            rows == reference::three_party_table() ? 1.0 : 0.0, 0.0);
    }

    bool all_pass = true;
    json jchecks = json::array();
    std::ostringstream os;
    for (Check& c : checks) {
        const double tol = cfg.tolerance >= 0.0 ? cfg.tolerance : c.tolerance;
        const double delta = std::abs(c.computed - c.expected);
        const bool pass = delta <= tol;
        all_pass = all_pass && pass;
        jchecks.push_back({{"name", c.name},
                           {"expected", jnum(c.expected)},
                           {"computed", jnum(c.computed)},
                           {"delta", jnum(delta)},
                           {"tolerance", jnum(tol)},
                           {"pass", pass}});
        os << (pass ? "PASS" : "FAIL") << "  " << c.name << "  expected " << sig(c.expected, 6)
           << "  computed " << sig(c.computed, 6) << "  tol " << sig(tol, 6) << "\n";
    }
    os << (all_pass ? "all checks passed" : "some checks FAILED") << " (" << checks.size()
       << " checks)\n";

    if (cfg.format == "json" || cfg.json_flag) {
        json j;
        j["checks"] = jchecks;
        j["pass"] = all_pass;
        emit(cfg, j.dump(2) + "\n");
    } else {
        emit(cfg, os.str());
    }
    return all_pass ? 0 : kExitVerify;
}

void add_scenario_flags(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--preset", cfg.preset,
                    "Named preset: bipartite (needs --n/--d), three-party, four-party");
    cmd->add_option("--parties", cfg.parties, "Number of parties N");
    cmd->add_option("--n", cfg.n, "Outcomes per measurement");
    cmd->add_option("--d", cfg.d, "Settings per party");
    cmd->add_option("--orbits", cfg.orbits_path,
                    "Orbit file: one representative per line, comma-separated k:j pairs");
}

void add_output_flags(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--format", cfg.format, "Output format: json, csv, or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--out", cfg.out, "Write output to this file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"Bell-inequality bounds and nonlocal games from cyclic-group orbits"};
    app.require_subcommand(1);

    CLI::App* bounds = app.add_subcommand(
        "bounds", "Classical and quantum bounds for a scenario (both quantum routes)");
    add_scenario_flags(bounds, cfg);
    add_output_flags(bounds, cfg);
    bounds->add_option("--label", cfg.label, "Also report the bound from this eigenvalue label");
    bounds->add_option("--cap", cfg.cap, "Strategy-space cap for the brute-force search");
    bounds->add_option("--threads", cfg.threads, "Worker threads for the brute-force search");

    CLI::App* orbits = app.add_subcommand(
        "orbits", "Winning-condition table: per-row question and outcome tuples. "
                  "CSV columns: orbit,question,win (win tuples joined by '|')");
    add_scenario_flags(orbits, cfg);
    add_output_flags(orbits, cfg);

    CLI::App* game = app.add_subcommand("game", "Nonlocal game values and simulations");
    game->require_subcommand(1);
    CLI::App* value = game->add_subcommand("value", "Exact classical and quantum game values");
    add_scenario_flags(value, cfg);
    add_output_flags(value, cfg);
    value->add_option("--cap", cfg.cap, "Strategy-space cap for the brute-force search");
    value->add_option("--threads", cfg.threads, "Worker threads for the brute-force search");
    CLI::App* simulate = game->add_subcommand(
        "simulate", "Seeded round-robin simulation; transcript CSV columns: "
                    "round,question,outcomes,win");
    add_scenario_flags(simulate, cfg);
    add_output_flags(simulate, cfg);
    simulate->add_option("--rounds", cfg.rounds, "Number of rounds to play");
    simulate->add_option("--seed", cfg.seed, "RNG seed (Born sampling only)");
    simulate->add_option("--strategy", cfg.strategy, "quantum (optimal state) or classical")
        ->check(CLI::IsMember({"quantum", "classical"}));
    simulate->add_option("--transcript", cfg.transcript, "Write the per-round CSV here");
    simulate->add_option("--cap", cfg.cap, "Strategy-space cap for the brute-force search");
    simulate->add_option("--threads", cfg.threads, "Worker threads for the brute-force search");

    CLI::App* sweep = app.add_subcommand(
        "sweep", "Closed-form figure data. CSV columns: x,y,f,g (modes odd/even) or "
                 "x,f_limit,f_one_third (mode figure3)");
    add_output_flags(sweep, cfg);
    sweep->add_option("--mode", cfg.mode, "odd, even, or figure3")
        ->check(CLI::IsMember({"odd", "even", "figure3"}));
    sweep->add_option("--grid", cfg.grid, "Grid resolution per axis (>= 2)");
    sweep->add_flag("--check-violation", cfg.check_violation,
                    "Exit 1 unless f > g at every grid point");

    CLI::App* verify = app.add_subcommand(
        "verify-paper", "Recompute every frozen reference value and report deltas");
    add_output_flags(verify, cfg);
    verify->add_flag("--json", cfg.json_flag, "Shorthand for --format json");
    verify->add_option("--tolerance", cfg.tolerance,
                       "Override every check tolerance with this value");
    verify->add_option("--cap", cfg.cap, "Strategy-space cap for the brute-force search");
    verify->add_option("--threads", cfg.threads, "Worker threads for the brute-force search");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (bounds->parsed()) return cmd_bounds(cfg);
        if (orbits->parsed()) return cmd_orbits(cfg);
        if (game->parsed() && value->parsed()) return cmd_game_value(cfg);
        if (game->parsed() && simulate->parsed()) return cmd_game_simulate(cfg);
        if (sweep->parsed()) return cmd_sweep(cfg);
        if (verify->parsed()) return cmd_verify_paper(cfg);
    } catch (const SizeError& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return kExitResource;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerify;
    }
    return kExitUsage;
}
