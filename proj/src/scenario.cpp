#include "bellorbit/scenario.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace bellorbit {

void Scenario::validate() const {
    if (parties < 2) throw DomainError("scenario: parties must be >= 2");
    if (outcomes < 2) throw DomainError("scenario: outcomes must be >= 2");
    if (settings < 2) throw DomainError("scenario: settings must be >= 2");
}

namespace {

void check_rep(const Scenario& sc, const OrbitRep& rep) {
    if (static_cast<int>(rep.parts.size()) != sc.parties) {
        throw DomainError("orbit rep has " + std::to_string(rep.parts.size()) +
                          " parts, scenario has " + std::to_string(sc.parties) + " parties");
    }
    for (const LocalVector& lv : rep.parts) {
        if (lv.setting < 0 || lv.setting >= sc.settings) {
            throw DomainError("orbit rep setting out of range");
        }
        if (lv.outcome < 0 || lv.outcome >= sc.outcomes) {
            throw DomainError("orbit rep outcome out of range");
        }
    }
}

}  // namespace

std::vector<Vector> measurement_basis(const Scenario& sc, int setting) {
    sc.validate();
    if (setting < 0 || setting >= sc.settings) {
        throw DomainError("measurement_basis: setting out of range");
    }
    const Matrix u = root_unitary(sc.outcomes, sc.settings);
    Matrix b = Matrix::Identity(sc.outcomes, sc.outcomes);
    for (int k = 0; k < setting; ++k) b = u * b;
    std::vector<Vector> out;
    out.reserve(static_cast<std::size_t>(sc.outcomes));
    for (int j = 0; j < sc.outcomes; ++j) out.push_back(b.col(j));
    return out;
}

Matrix observable(const Scenario& sc, int setting) {
    const std::vector<Vector> basis = measurement_basis(sc, setting);
    Matrix a = Matrix::Zero(sc.outcomes, sc.outcomes);
    for (int j = 1; j < sc.outcomes; ++j) {
        a.noalias() += static_cast<double>(j) * basis[static_cast<std::size_t>(j)] *
                       basis[static_cast<std::size_t>(j)].adjoint();
    }
    return a;
}

Vector rep_state(const Scenario& sc, const OrbitRep& rep) {
    sc.validate();
    check_rep(sc, rep);
    const Matrix u = root_unitary(sc.outcomes, sc.settings);
    Vector state;
    for (const LocalVector& lv : rep.parts) {
        Vector local = Vector::Zero(sc.outcomes);
        local(lv.outcome) = 1.0;
        for (int k = 0; k < lv.setting; ++k) local = u * local;
        state = state.size() == 0 ? local : Vector(kron(state, local, sc.dim()));
    }
    return state;
}

Event decode_event(const Scenario& sc, const OrbitRep& rep, int t) {
    sc.validate();
    check_rep(sc, rep);
    if (t < 0 || t >= sc.group_order()) {
        throw DomainError("decode_event: t out of [0, nd)");
    }
    Event ev;
    for (const LocalVector& lv : rep.parts) {
        const int shifted = t + lv.setting;
        ev.settings.push_back(shifted % sc.settings);
        ev.outcomes.push_back((lv.outcome + shifted / sc.settings) % sc.outcomes);
    }
    return ev;
}

std::vector<Event> orbit_events(const Scenario& sc, const OrbitRep& rep) {
    std::vector<Event> events;
    events.reserve(static_cast<std::size_t>(sc.group_order()));
    for (int t = 0; t < sc.group_order(); ++t) {
        events.push_back(decode_event(sc, rep, t));
    }
    std::vector<Event> sorted = events;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw DomainError("orbit_events: orbit of " + format_orbit_rep(rep) +
                          " contains duplicate events");
    }
    return events;
}

bool orbits_distinct(const Scenario& sc, const std::vector<OrbitRep>& reps) {
    if (reps.size() < 2) throw DomainError("orbits_distinct: need at least two reps");
    // Each orbit element is a product of computational/measurement basis
    // states; equality up to phase means overlap magnitude 1.
    std::vector<std::vector<Vector>> orbits;
    const Matrix u = root_unitary(sc.outcomes, sc.settings);
    Matrix v = u;
    for (int p = 1; p < sc.parties; ++p) v = kron(v, u, sc.dim());
    for (const OrbitRep& rep : reps) {
        std::vector<Vector> orbit{rep_state(sc, rep)};
        for (int t = 1; t < sc.group_order(); ++t) orbit.push_back(v * orbit.back());
        orbits.push_back(std::move(orbit));
    }
    for (std::size_t a = 0; a < orbits.size(); ++a) {
        for (std::size_t b = a + 1; b < orbits.size(); ++b) {
            for (const Vector& va : orbits[a]) {
                for (const Vector& vb : orbits[b]) {
                    if (std::abs(va.dot(vb)) >= 1.0 - 1e-9) return false;
                }
            }
        }
    }
    return true;
}

Preset bipartite_preset(int n, int d) {
    Scenario sc{2, n, d};
    sc.validate();
    return Preset{"bipartite", sc, {OrbitRep{{{0, 0}, {0, 1}}}, OrbitRep{{{0, 0}, {1, 1}}}}};
}

Preset four_party_preset() {
    // Note the fifth seed carries |0> on the last party: that is the state
    // behind the published six-orbit spectrum, and the 48-event sum's
    // P(a_0=d_0=j, b_1=c_1=j+1) terms.
    return Preset{"four-party",
                  Scenario{4, 4, 2},
                  {
                      OrbitRep{{{0, 0}, {0, 0}, {0, 0}, {1, 1}}},  // |0 0 0 v1>
                      OrbitRep{{{0, 0}, {1, 0}, {1, 0}, {0, 0}}},  // |0 v0 v0 0>
                      OrbitRep{{{0, 0}, {1, 0}, {0, 0}, {1, 0}}},  // |0 v0 0 v0>
                      OrbitRep{{{1, 0}, {1, 3}, {0, 0}, {0, 3}}},  // |v0 v3 0 3>
                      OrbitRep{{{0, 0}, {1, 1}, {1, 1}, {0, 0}}},  // |0 v1 v1 0>
                      OrbitRep{{{0, 0}, {1, 2}, {0, 2}, {0, 0}}},  // |0 v2 2 0>
                  }};
}

Preset three_party_preset() {
    const Preset four = four_party_preset();
    Preset out{"three-party", Scenario{3, 4, 2}, {}};
    for (std::size_t idx : {1u, 3u, 4u, 5u}) {
        OrbitRep rep = four.reps[idx];
        rep.parts.pop_back();
        out.reps.push_back(std::move(rep));
    }
    return out;
}

std::vector<OrbitRep> parse_orbit_reps(std::istream& in, const Scenario& sc) {
    std::vector<OrbitRep> reps;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;

        OrbitRep rep;
        std::istringstream fields(line);
        std::string pair;
        while (std::getline(fields, pair, ',')) {
            int setting = 0, outcome = 0;
            char colon = 0;
            std::istringstream ps(pair);
            if (!(ps >> setting >> colon >> outcome) || colon != ':') {
                throw DomainError("orbit file line " + std::to_string(lineno) +
                                  ": expected `setting:outcome`, got `" + pair + "`");
            }
            rep.parts.push_back({setting, outcome});
        }
        try {
            check_rep(sc, rep);
        } catch (const DomainError& err) {
            throw DomainError("orbit file line " + std::to_string(lineno) + ": " + err.what());
        }
        reps.push_back(std::move(rep));
    }
    return reps;
}

std::string format_orbit_rep(const OrbitRep& rep) {
    std::string out;
    for (std::size_t p = 0; p < rep.parts.size(); ++p) {
        if (p) out += ',';
        out += std::to_string(rep.parts[p].setting) + ':' + std::to_string(rep.parts[p].outcome);
    }
    return out;
}

}  // namespace bellorbit
