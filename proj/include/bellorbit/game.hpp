#ifndef BELLORBIT_GAME_HPP_INCLUDED
#define BELLORBIT_GAME_HPP_INCLUDED

#include <cstdint>
#include <iosfwd>
#include <map>
#include <vector>

#include <nlohmann/json.hpp>

#include "bellorbit/bounds.hpp"

namespace bellorbit {

/// One (orbit, question) group: the question asked and the outcome tuples
/// that win it. The referee draws rows uniformly, so a question shared by
/// two orbits is asked twice as often.
struct GameRow {
    int orbit = 0;
    std::vector<int> question;
    std::vector<std::vector<int>> win;  // sorted outcome tuples
};

struct NonlocalGame {
    Scenario scenario;
    std::vector<GameRow> rows;

    /// Distinct questions with weight = multiplicity / #rows.
    std::map<std::vector<int>, double> question_weights() const;
};

/// Group each orbit's events by settings tuple. Throws if two rows of the
/// same question have overlapping win sets.
NonlocalGame game_from_orbits(const Scenario& sc, const std::vector<OrbitRep>& reps);

/// Per-party response table, [party][setting] -> outcome.
struct DeterministicStrategy {
    std::vector<std::vector<int>> answers;
};

struct ClassicalGameValue {
    double value = 0.0;
    long long rows_won = 0;
    DeterministicStrategy witness;
};

/// Exact maximum winning probability over deterministic strategies.
ClassicalGameValue classical_game_value(const NonlocalGame& game,
                                        long long cap = kDefaultStrategyCap, int threads = 1);

/// Shared pure state measured in the scenario's product bases.
struct QuantumStrategy {
    Vector shared_state;
};

/// Born-rule winning probability, value = sum_rows (1/#rows) P(outcome in win set).
double quantum_game_value(const NonlocalGame& game, const QuantumStrategy& qs);

/// Outcome-tuple distribution for one question, indexed in mixed radix
/// (party 0 most significant).
std::vector<double> born_distribution(const Scenario& sc, const QuantumStrategy& qs,
                                      const std::vector<int>& question);

struct SimulationResult {
    long long rounds = 0;
    long long wins = 0;
    double win_frequency = 0.0;
    double standard_error = 0.0;
};

/// Play `rounds` rounds, cycling through the rows round-robin; the seeded
/// RNG drives only the Born-rule outcome sampling, so deterministic
/// strategies give exact frequencies. Optionally writes a CSV transcript
/// (round,question,outcomes,win).
SimulationResult simulate(const NonlocalGame& game, const DeterministicStrategy& strat,
                          long long rounds, std::uint64_t seed, std::ostream* transcript = nullptr);
SimulationResult simulate(const NonlocalGame& game, const QuantumStrategy& strat,
                          long long rounds, std::uint64_t seed, std::ostream* transcript = nullptr);

/// {scenario, rows:[{question, win}]} per the export schema.
nlohmann::json game_to_json(const NonlocalGame& game);

}  // namespace bellorbit

#endif
