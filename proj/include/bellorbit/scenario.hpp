#ifndef BELLORBIT_SCENARIO_HPP_INCLUDED
#define BELLORBIT_SCENARIO_HPP_INCLUDED

#include <iosfwd>
#include <string>
#include <vector>

#include "bellorbit/representation.hpp"

namespace bellorbit {

/// Measurement scenario: `parties` players, each choosing one of `settings`
/// measurements with `outcomes` possible results.
struct Scenario {
    int parties = 0;
    int outcomes = 0;  // n
    int settings = 0;  // d

    int group_order() const { return outcomes * settings; }
    Eigen::Index dim(Eigen::Index cap = kDefaultDimCap) const {
        return tensor_dimension(outcomes, parties, cap);
    }
    void validate() const;
    bool operator==(const Scenario&) const = default;
};

/// One party's state U^setting |outcome>.
struct LocalVector {
    int setting = 0;
    int outcome = 0;
    bool operator==(const LocalVector&) const = default;
};

/// A product state given per party; the seed of one group orbit.
struct OrbitRep {
    std::vector<LocalVector> parts;
    bool operator==(const OrbitRep&) const = default;
};

/// A measurement event: the settings asked and the outcomes observed.
struct Event {
    std::vector<int> settings;
    std::vector<int> outcomes;
    bool operator==(const Event&) const = default;
    auto operator<=>(const Event&) const = default;
};

/// The n orthonormal vectors U^k |j>, j = 0..n-1.
std::vector<Vector> measurement_basis(const Scenario& sc, int setting);

/// Observable with spectrum {0..n-1} on the setting-k basis.
Matrix observable(const Scenario& sc, int setting);

/// Tensor product of the per-party states; unit norm.
Vector rep_state(const Scenario& sc, const OrbitRep& rep);

/// Event encoded by the t-th orbit element of `rep`. Pure integer
/// arithmetic: party p gets setting (t+k_p) mod d and outcome
/// j_p + floor((t+k_p)/d) mod n.
Event decode_event(const Scenario& sc, const OrbitRep& rep, int t);

/// All nd events of the orbit, t = 0..nd-1; throws if any repeat.
std::vector<Event> orbit_events(const Scenario& sc, const OrbitRep& rep);

/// True iff no state of one orbit coincides (up to global phase) with a
/// state of another orbit.
bool orbits_distinct(const Scenario& sc, const std::vector<OrbitRep>& reps);

/// A named scenario with its orbit representatives.
struct Preset {
    std::string name;
    Scenario scenario;
    std::vector<OrbitRep> reps;
};

/// |0 v_1^0> and |0 v_1^1> on C^n x C^n.
Preset bipartite_preset(int n, int d);
/// The six four-party orbit seeds on (C^4)^4, two settings each.
Preset four_party_preset();
/// The four three-party seeds: four-party reps 2,4,5,6 minus the last party.
Preset three_party_preset();

/// Parse orbit representatives, one per line, as comma-separated `k:j`
/// pairs (e.g. `0:0,1:3,0:0,0:3`). Blank lines and `#` comments skipped.
std::vector<OrbitRep> parse_orbit_reps(std::istream& in, const Scenario& sc);

std::string format_orbit_rep(const OrbitRep& rep);

}  // namespace bellorbit

#endif
