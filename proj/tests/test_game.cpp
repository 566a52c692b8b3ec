#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "bellorbit/game.hpp"
#include "bellorbit/reference.hpp"

using namespace bellorbit;

namespace {

NonlocalGame preset_game(const Preset& preset) {
    return game_from_orbits(preset.scenario, preset.reps);
}

QuantumStrategy optimal_strategy(const Preset& preset) {
    return QuantumStrategy{
        quantum_bound_full(bell_operator(preset.scenario, preset.reps)).optimal_state};
}

std::string digits(const std::vector<int>& xs) {
    std::string out;
    for (int x : xs) out += static_cast<char>('0' + x);
    return out;
}

std::set<std::pair<std::string, std::set<std::string>>> row_set(const NonlocalGame& game) {
    std::set<std::pair<std::string, std::set<std::string>>> out;
    for (const GameRow& row : game.rows) {
        std::set<std::string> wins;
        for (const auto& o : row.win) wins.insert(digits(o));
        out.insert({digits(row.question), std::move(wins)});
    }
    return out;
}

}  // namespace

TEST_CASE("bipartite game shape: 2d questions, weight 1/(2d), win sets of size n") {
    for (int n : {2, 3, 4}) {
        for (int d : {2, 3}) {
            const NonlocalGame game = preset_game(bipartite_preset(n, d));
            CHECK(game.rows.size() == static_cast<std::size_t>(2 * d));
            const auto weights = game.question_weights();
            CHECK(weights.size() == static_cast<std::size_t>(2 * d));
            double total = 0.0;
            for (const auto& [question, weight] : weights) {
                CHECK(weight == doctest::Approx(1.0 / (2 * d)).epsilon(1e-12));
                total += weight;
            }
            CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
            for (const GameRow& row : game.rows) {
                CHECK(row.win.size() == static_cast<std::size_t>(n));
            }
        }
    }
}

TEST_CASE("bipartite winning predicate: outcome difference 1 mod n, 2 on the wrap question") {
    const NonlocalGame game = preset_game(bipartite_preset(5, 3));
    const int n = 5, d = 3;
    for (const GameRow& row : game.rows) {
        const bool wrap = row.question[0] == d - 1 && row.question[1] == 0;
        const int delta = wrap ? 2 : 1;
        for (const auto& o : row.win) {
            CHECK((o[1] - o[0] + n) % n == delta);
        }
    }
}

TEST_CASE("four-party game: 12 rows, 10 distinct questions, doubled 0110 and 1001") {
    const NonlocalGame game = preset_game(four_party_preset());
    CHECK(game.rows.size() == 12);
    const auto weights = game.question_weights();
    CHECK(weights.size() == 10);
    std::map<std::string, int> multiplicity;
    for (const GameRow& row : game.rows) {
        multiplicity[digits(row.question)] += 1;
        CHECK(row.win.size() == 4);
    }
    CHECK(multiplicity["0110"] == 2);
    CHECK(multiplicity["1001"] == 2);
}

TEST_CASE("preset games reproduce the winning-condition tables") {
    CHECK(row_set(preset_game(four_party_preset())) == reference::four_party_table());
    CHECK(row_set(preset_game(three_party_preset())) == reference::three_party_table());
}

TEST_CASE("classical game values") {
    const ClassicalGameValue bip = classical_game_value(preset_game(bipartite_preset(3, 2)));
    CHECK(bip.value == doctest::Approx(0.75).epsilon(1e-12));
    // constant-0 / constant-1 is optimal
    const DeterministicStrategy constant{{{0, 0}, {1, 1}}};
    long long won = 0;
    for (const GameRow& row : preset_game(bipartite_preset(3, 2)).rows) {
        std::vector<int> ans{constant.answers[0][static_cast<std::size_t>(row.question[0])],
                             constant.answers[1][static_cast<std::size_t>(row.question[1])]};
        won += std::binary_search(row.win.begin(), row.win.end(), ans);
    }
    CHECK(won == bip.rows_won);

    CHECK(classical_game_value(preset_game(four_party_preset())).value ==
          doctest::Approx(2.0 / 12.0).epsilon(1e-12));
    CHECK(classical_game_value(preset_game(three_party_preset())).value ==
          doctest::Approx(2.0 / 8.0).epsilon(1e-12));
}

TEST_CASE("quantum game values at the optimal state") {
    const Preset four = four_party_preset();
    const double v4 = quantum_game_value(preset_game(four), optimal_strategy(four));
    CHECK(v4 == doctest::Approx(0.1684).epsilon(1e-3));

    const Preset three = three_party_preset();
    const double v3 = quantum_game_value(preset_game(three), optimal_strategy(three));
    CHECK(v3 == doctest::Approx(0.2594).epsilon(1e-3));

    const Preset chsh = bipartite_preset(2, 2);
    const double v2 = quantum_game_value(preset_game(chsh), optimal_strategy(chsh));
    CHECK(v2 == doctest::Approx((2.0 + std::sqrt(2.0)) / 4.0).epsilon(1e-9));
}

TEST_CASE("value identities tie game values to the Bell bounds") {
    for (const Preset& preset :
         {bipartite_preset(3, 2), three_party_preset(), four_party_preset()}) {
        const NonlocalGame game = preset_game(preset);
        const double rows = static_cast<double>(game.rows.size());

        const BoundsReport report = bounds_report(preset.scenario, preset.reps);
        const ClassicalGameValue classical = classical_game_value(game);
        CHECK(classical.rows_won == report.classical);

        const QuantumStrategy qs{report.optimal_state};
        CHECK(std::abs(quantum_game_value(game, qs) * rows - report.quantum_full) <= 1e-8);
        CHECK(quantum_game_value(game, qs) >= classical.value);
    }
}

TEST_CASE("born distributions normalize and specialize correctly") {
    const Preset chsh = bipartite_preset(2, 2);
    const Scenario& sc = chsh.scenario;

    // a product basis state yields a point mass on its own outcomes
    Vector point = Vector::Zero(4);
    point(2) = 1.0;  // |1>|0>
    const std::vector<double> p = born_distribution(sc, QuantumStrategy{point}, {0, 0});
    CHECK(p[2] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(p[0] + p[1] + p[3] == doctest::Approx(0.0).epsilon(1e-12));

    // the uniform-amplitude state is uniform on the computational question
    const Vector uniform = Vector::Constant(4, Complex(0.5, 0.0));
    for (double prob : born_distribution(sc, QuantumStrategy{uniform}, {0, 0})) {
        CHECK(prob == doctest::Approx(0.25).epsilon(1e-12));
    }

    // every distribution sums to one
    const QuantumStrategy qs = optimal_strategy(chsh);
    for (int s = 0; s < 2; ++s) {
        for (int t = 0; t < 2; ++t) {
            const std::vector<double> dist = born_distribution(sc, qs, {s, t});
            CHECK(std::accumulate(dist.begin(), dist.end(), 0.0) ==
                  doctest::Approx(1.0).epsilon(1e-10));
        }
    }
}

TEST_CASE("born probabilities averaged over win sets recover the game value") {
    const Preset three = three_party_preset();
    const NonlocalGame game = preset_game(three);
    const QuantumStrategy qs = optimal_strategy(three);
    double value = 0.0;
    for (const GameRow& row : game.rows) {
        const std::vector<double> dist = born_distribution(game.scenario, qs, row.question);
        for (const auto& o : row.win) {
            std::size_t idx = 0;
            for (int digit : o) idx = idx * 4 + static_cast<std::size_t>(digit);
            value += dist[idx];
        }
    }
    value /= static_cast<double>(game.rows.size());
    CHECK(value == doctest::Approx(quantum_game_value(game, qs)).epsilon(1e-12));
}

TEST_CASE("deterministic simulation is exact and consumes no randomness") {
    const NonlocalGame game = preset_game(bipartite_preset(3, 2));
    const DeterministicStrategy witness{{{0, 0}, {1, 1}}};
    for (long long rounds : {4LL, 400LL, 100000LL}) {
        const SimulationResult res = simulate(game, witness, rounds, 123);
        CHECK(res.win_frequency == doctest::Approx(0.75).epsilon(1e-12));
    }
}

TEST_CASE("quantum simulation lands within five standard errors") {
    const Preset four = four_party_preset();
    const NonlocalGame game = preset_game(four);
    const QuantumStrategy qs = optimal_strategy(four);
    const double exact = quantum_game_value(game, qs);
    const SimulationResult res = simulate(game, qs, 100000, 7);
    CHECK(std::abs(res.win_frequency - exact) <= 5.0 * res.standard_error);
}

TEST_CASE("same seed gives a byte-identical transcript") {
    const Preset chsh = bipartite_preset(2, 2);
    const NonlocalGame game = preset_game(chsh);
    const QuantumStrategy qs = optimal_strategy(chsh);
    std::ostringstream a, b;
    const SimulationResult ra = simulate(game, qs, 2000, 42, &a);
    const SimulationResult rb = simulate(game, qs, 2000, 42, &b);
    CHECK(a.str() == b.str());
    CHECK(ra.wins == rb.wins);
    std::ostringstream c;
    simulate(game, qs, 2000, 43, &c);
    CHECK(a.str() != c.str());
    CHECK(a.str().substr(0, 30) == "round,question,outcomes,win\n0,");
}

TEST_CASE("game JSON export carries the schema") {
    const NonlocalGame game = preset_game(three_party_preset());
    const nlohmann::json j = game_to_json(game);
    CHECK(j["scenario"]["parties"] == 3);
    CHECK(j["scenario"]["outcomes"] == 4);
    CHECK(j["scenario"]["settings"] == 2);
    REQUIRE(j["rows"].size() == 8);
    CHECK(j["rows"][0]["question"].size() == 3);
    CHECK(j["rows"][0]["win"].size() == 4);
}

TEST_CASE("duplicated orbits are rejected before game construction") {
    const Preset bip = bipartite_preset(3, 2);
    CHECK_THROWS_AS(game_from_orbits(bip.scenario, {bip.reps[0], bip.reps[0]}), DomainError);
}
