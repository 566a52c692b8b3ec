#include "bellorbit/game.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <random>
#include <set>

namespace bellorbit {

std::map<std::vector<int>, double> NonlocalGame::question_weights() const {
    std::map<std::vector<int>, double> weights;
    for (const GameRow& row : rows) weights[row.question] += 1.0 / rows.size();
    return weights;
}

NonlocalGame game_from_orbits(const Scenario& sc, const std::vector<OrbitRep>& reps) {
    if (!orbits_distinct(sc, reps)) {
        throw DomainError("game_from_orbits: orbits are not distinct");
    }
    NonlocalGame game{sc, {}};
    for (std::size_t r = 0; r < reps.size(); ++r) {
        std::map<std::vector<int>, std::vector<std::vector<int>>> grouped;
        for (const Event& ev : orbit_events(sc, reps[r])) {
            grouped[ev.settings].push_back(ev.outcomes);
        }
        for (auto& [question, wins] : grouped) {
            std::sort(wins.begin(), wins.end());
            game.rows.push_back(GameRow{static_cast<int>(r), question, std::move(wins)});
        }
    }
    // Rows sharing a question must not overlap, otherwise the game value
    // no longer tracks the Bell sum.
    std::map<std::vector<int>, std::set<std::vector<int>>> seen;
    for (const GameRow& row : game.rows) {
        auto& pool = seen[row.question];
        for (const auto& outcome : row.win) {
            if (!pool.insert(outcome).second) {
                throw DomainError("game_from_orbits: overlapping win sets for a shared question");
            }
        }
    }
    return game;
}

namespace {

bool row_won(const GameRow& row, const std::vector<int>& outcomes) {
    return std::binary_search(row.win.begin(), row.win.end(), outcomes);
}

std::vector<int> answer(const DeterministicStrategy& strat, const std::vector<int>& question) {
    std::vector<int> out;
    out.reserve(question.size());
    for (std::size_t p = 0; p < question.size(); ++p) {
        out.push_back(strat.answers[p][static_cast<std::size_t>(question[p])]);
    }
    return out;
}

}  // namespace

ClassicalGameValue classical_game_value(const NonlocalGame& game, long long cap, int threads) {
    const Scenario& sc = game.scenario;
    // A strategy wins a row iff it satisfies one of the row's events, and
    // win sets are disjoint per question, so the row count is exactly the
    // Bell-sum count over all orbit events.
    std::vector<Event> events;
    for (const GameRow& row : game.rows) {
        for (const auto& outcome : row.win) events.push_back(Event{row.question, outcome});
    }
    const ClassicalResult best = classical_bound(sc, events, cap, threads);
    ClassicalGameValue out;
    out.rows_won = best.max_count;
    out.value = static_cast<double>(best.max_count) / static_cast<double>(game.rows.size());
    out.witness = DeterministicStrategy{best.strategy};
    return out;
}

std::vector<double> born_distribution(const Scenario& sc, const QuantumStrategy& qs,
                                      const std::vector<int>& question) {
    if (qs.shared_state.size() != sc.dim()) {
        throw DomainError("born_distribution: state dimension does not match scenario");
    }
    if (static_cast<int>(question.size()) != sc.parties) {
        throw DomainError("born_distribution: question has wrong arity");
    }
    const Matrix u = root_unitary(sc.outcomes, sc.settings);
    // Coefficients in the product measurement basis: apply (U^q)^H per party.
    Matrix basis_change(1, 1);
    basis_change(0, 0) = 1.0;
    for (int q : question) {
        if (q < 0 || q >= sc.settings) throw DomainError("born_distribution: setting out of range");
        Matrix local = Matrix::Identity(sc.outcomes, sc.outcomes);
        for (int k = 0; k < q; ++k) local = u * local;
        basis_change = kron(basis_change, local.adjoint().eval(), sc.dim());
    }
    const Vector coeffs = basis_change * qs.shared_state;
    std::vector<double> probs(static_cast<std::size_t>(coeffs.size()));
    for (Eigen::Index i = 0; i < coeffs.size(); ++i) probs[static_cast<std::size_t>(i)] = std::norm(coeffs(i));
    return probs;
}

namespace {

std::size_t flat_index(const Scenario& sc, const std::vector<int>& outcomes) {
    std::size_t idx = 0;
    for (int o : outcomes) idx = idx * static_cast<std::size_t>(sc.outcomes) + static_cast<std::size_t>(o);
    return idx;
}

}  // namespace

double quantum_game_value(const NonlocalGame& game, const QuantumStrategy& qs) {
    std::map<std::vector<int>, std::vector<double>> dists;
    double value = 0.0;
    for (const GameRow& row : game.rows) {
        auto it = dists.find(row.question);
        if (it == dists.end()) {
            it = dists.emplace(row.question, born_distribution(game.scenario, qs, row.question))
                     .first;
        }
        for (const auto& outcome : row.win) {
            value += it->second[flat_index(game.scenario, outcome)];
        }
    }
    return value / static_cast<double>(game.rows.size());
}

namespace {

struct Responder {
    const NonlocalGame& game;
    const DeterministicStrategy* det = nullptr;
    const QuantumStrategy* quantum = nullptr;
    std::map<std::vector<int>, std::vector<double>> cdfs;

    std::vector<int> respond(const GameRow& row, std::mt19937_64& rng) {
        if (det != nullptr) return answer(*det, row.question);
        auto it = cdfs.find(row.question);
        if (it == cdfs.end()) {
            std::vector<double> cdf = born_distribution(game.scenario, *quantum, row.question);
            double acc = 0.0;
            for (double& p : cdf) {
                acc += p;
                p = acc;
            }
            it = cdfs.emplace(row.question, std::move(cdf)).first;
        }
        const double r = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
        const auto& cdf = it->second;
        const std::size_t idx = static_cast<std::size_t>(
            std::lower_bound(cdf.begin(), cdf.end(), r) - cdf.begin());
        const std::size_t clamped = std::min(idx, cdf.size() - 1);
        // unpack mixed radix
        std::vector<int> outcomes(static_cast<std::size_t>(game.scenario.parties), 0);
        std::size_t rest = clamped;
        for (int p = game.scenario.parties - 1; p >= 0; --p) {
            outcomes[static_cast<std::size_t>(p)] = static_cast<int>(rest % game.scenario.outcomes);
            rest /= static_cast<std::size_t>(game.scenario.outcomes);
        }
        return outcomes;
    }
};

std::string joined(const std::vector<int>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ';';
        out += std::to_string(xs[i]);
    }
    return out;
}

SimulationResult run_rounds(const NonlocalGame& game, Responder responder, long long rounds,
                            std::uint64_t seed, std::ostream* transcript) {
    if (rounds < 1) throw DomainError("simulate: rounds must be >= 1");
    std::mt19937_64 rng(seed);
    if (transcript != nullptr) *transcript << "round,question,outcomes,win\n";
    long long wins = 0;
    for (long long r = 0; r < rounds; ++r) {
        const GameRow& row = game.rows[static_cast<std::size_t>(r % game.rows.size())];
        const std::vector<int> outcomes = responder.respond(row, rng);
        const bool win = row_won(row, outcomes);
        wins += win;
        if (transcript != nullptr) {
            *transcript << r << ',' << joined(row.question) << ',' << joined(outcomes) << ','
                        << (win ? 1 : 0) << '\n';
        }
    }
    SimulationResult result;
    result.rounds = rounds;
    result.wins = wins;
    result.win_frequency = static_cast<double>(wins) / static_cast<double>(rounds);
    result.standard_error =
        std::sqrt(result.win_frequency * (1.0 - result.win_frequency) / static_cast<double>(rounds));
    return result;
}

}  // namespace

SimulationResult simulate(const NonlocalGame& game, const DeterministicStrategy& strat,
                          long long rounds, std::uint64_t seed, std::ostream* transcript) {
    Responder responder{game, &strat, nullptr, {}};
    return run_rounds(game, std::move(responder), rounds, seed, transcript);
}

SimulationResult simulate(const NonlocalGame& game, const QuantumStrategy& strat,
                          long long rounds, std::uint64_t seed, std::ostream* transcript) {
    Responder responder{game, nullptr, &strat, {}};
    return run_rounds(game, std::move(responder), rounds, seed, transcript);
}

nlohmann::json game_to_json(const NonlocalGame& game) {
    nlohmann::json rows = nlohmann::json::array();
    for (const GameRow& row : game.rows) {
        rows.push_back({{"orbit", row.orbit}, {"question", row.question}, {"win", row.win}});
    }
    return nlohmann::json{{"scenario",
                           {{"parties", game.scenario.parties},
                            {"outcomes", game.scenario.outcomes},
                            {"settings", game.scenario.settings}}},
                          {"rows", rows}};
}

}  // namespace bellorbit
