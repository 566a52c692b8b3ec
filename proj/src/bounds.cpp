#include "bellorbit/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <thread>

namespace bellorbit {

namespace {

constexpr double kPi = std::numbers::pi;

Matrix diagonal_action(const Scenario& sc, Eigen::Index cap) {
    const Matrix u = root_unitary(sc.outcomes, sc.settings);
    Matrix v = u;
    for (int p = 1; p < sc.parties; ++p) v = kron(v, u, cap);
    return v;
}

}  // namespace

BellOperator bell_operator(const Scenario& sc, const std::vector<OrbitRep>& reps,
                           Eigen::Index cap) {
    sc.validate();
    if (reps.empty()) throw DomainError("bell_operator: no orbit representatives");
    const Eigen::Index dim = sc.dim(cap);
    const Matrix v = diagonal_action(sc, cap);
    Matrix op = Matrix::Zero(dim, dim);
    for (const OrbitRep& rep : reps) {
        Vector state = rep_state(sc, rep);
        for (int t = 0; t < sc.group_order(); ++t) {
            op.noalias() += state * state.adjoint();
            state = v * state;
        }
    }
    return BellOperator{sc, reps, std::move(op)};
}

QuantumBound quantum_bound_full(const BellOperator& bo) {
    const EigResult eig = hermitian_eig(bo.op);
    const Eigen::Index last = eig.values.size() - 1;
    return QuantumBound{eig.values(last), eig.vectors.col(last)};
}

std::vector<GramBlock> gram_blocks(const Scenario& sc, const std::vector<OrbitRep>& reps) {
    sc.validate();
    const RootExponents rx = root_exponents(sc.outcomes, sc.settings);
    std::vector<Vector> states;
    states.reserve(reps.size());
    for (const OrbitRep& rep : reps) states.push_back(rep_state(sc, rep));

    std::vector<GramBlock> blocks;
    for (int label = 0; label < rx.group_order(); ++label) {
        const std::vector<Vector> basis = eigenspace_basis(rx, sc.parties, label);
        if (basis.empty()) continue;
        GramBlock block;
        block.label = label;
        for (const Vector& state : states) {
            Vector psi = Vector::Zero(state.size());
            for (const Vector& b : basis) psi += b.dot(state) * b;
            block.projected.push_back(std::move(psi));
        }
        block.m = gram(block.projected);
        blocks.push_back(std::move(block));
    }
    return blocks;
}

GramBound quantum_bound_gram(const std::vector<GramBlock>& blocks, int group_order) {
    if (blocks.empty()) throw DomainError("quantum_bound_gram: no blocks");
    GramBound out;
    for (const GramBlock& block : blocks) {
        const EigResult eig = hermitian_eig(block.m);
        out.per_label.push_back(group_order * eig.values(eig.values.size() - 1));
        out.value = std::max(out.value, out.per_label.back());
    }
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (out.per_label[i] >= out.value - 1e-9) {
            out.best_labels.push_back(blocks[i].label);
        }
    }
    return out;
}

namespace {

// Strategy index decoding: party p's response to setting s is digit
// (p*d + s) of the index in base n.
struct StrategyCodec {
    int parties, outcomes, settings;

    std::vector<std::vector<int>> decode(long long idx) const {
        std::vector<std::vector<int>> strat(
            static_cast<std::size_t>(parties),
            std::vector<int>(static_cast<std::size_t>(settings), 0));
        for (int p = 0; p < parties; ++p) {
            for (int s = 0; s < settings; ++s) {
                strat[static_cast<std::size_t>(p)][static_cast<std::size_t>(s)] =
                    static_cast<int>(idx % outcomes);
                idx /= outcomes;
            }
        }
        return strat;
    }
};

long long count_satisfied(const std::vector<Event>& events,
                          const std::vector<std::vector<int>>& strat) {
    long long count = 0;
    for (const Event& ev : events) {
        bool ok = true;
        for (std::size_t p = 0; p < ev.settings.size() && ok; ++p) {
            ok = strat[p][static_cast<std::size_t>(ev.settings[p])] == ev.outcomes[p];
        }
        count += ok;
    }
    return count;
}

}  // namespace

ClassicalResult classical_bound(const Scenario& sc, const std::vector<Event>& events,
                                long long cap, int threads) {
    sc.validate();
    if (events.empty()) throw DomainError("classical_bound: no events");
    double space = 1.0;
    for (int i = 0; i < sc.parties * sc.settings; ++i) space *= sc.outcomes;
    if (space > static_cast<double>(cap)) {
        char spaced[32];
        std::snprintf(spaced, sizeof(spaced), "%.6g", space);
        throw SizeError("classical_bound: strategy space " + std::string(spaced) +
                        " exceeds cap " + std::to_string(cap) + " (raise with --cap)");
    }
    const long long total = static_cast<long long>(space);
    const StrategyCodec codec{sc.parties, sc.outcomes, sc.settings};

    threads = std::clamp(threads, 1, 64);
    // Partitioned scan; ties resolved to the lowest strategy index so the
    // result is independent of the partitioning.
    std::vector<std::pair<long long, long long>> best(
        static_cast<std::size_t>(threads), {-1, 0});  // (count, index)
    auto scan = [&](int tid) {
        const long long lo = total * tid / threads;
        const long long hi = total * (tid + 1) / threads;
        long long best_count = -1, best_idx = 0;
        for (long long idx = lo; idx < hi; ++idx) {
            const long long c = count_satisfied(events, codec.decode(idx));
            if (c > best_count) {
                best_count = c;
                best_idx = idx;
            }
        }
        best[static_cast<std::size_t>(tid)] = {best_count, best_idx};
    };
    if (threads == 1) {
        scan(0);
    } else {
        std::vector<std::thread> pool;
        for (int tid = 0; tid < threads; ++tid) pool.emplace_back(scan, tid);
        for (std::thread& th : pool) th.join();
    }
    auto winner = best[0];
    for (const auto& cand : best) {
        if (cand.first > winner.first ||
            (cand.first == winner.first && cand.second < winner.second)) {
            winner = cand;
        }
    }
    return ClassicalResult{winner.first, codec.decode(winner.second)};
}

double closed_form_bipartite(int n, int d) {
    if (n < 2 || d < 2) throw DomainError("closed_form_bipartite: need n >= 2 and d >= 2");
    const double csc = 1.0 / std::sin(kPi / (d * n));
    if (n % 2 == 1) {
        const double x = std::cos((d - 2) * kPi / (2.0 * d)) * csc -
                         std::cos((d * n - 2) * kPi / (2.0 * d * n)) * csc;
        return d * (1.0 + n + x) / n;
    }
    const double x = std::cos((d * n + 2 - 2 * n) * kPi / (2.0 * d * n)) * csc -
                     std::cos((d * n - 2) * kPi / (2.0 * d * n)) * csc;
    const double re = 1.0 + x + std::cos(kPi / d);
    const double im = std::sin(kPi / d);
    return d * (n + std::hypot(re, im)) / n;
}

namespace {

void check_f_domain(double x, double y, double ymax) {
    if (!(x > 0.0 && x <= 0.5)) throw DomainError("f: x outside (0, 1/2]");
    if (!(y > 0.0 && y <= ymax)) throw DomainError("f: y outside (0, " + std::to_string(ymax) + "]");
}

}  // namespace

double f_odd(double x, double y) {
    check_f_domain(x, y, 1.0 / 3.0);
    const double csc = 1.0 / std::sin(kPi * x * y);
    return 1.0 + y + y * (std::sin(kPi * x) - std::sin(kPi * x * y)) * csc;
}

double f_even(double x, double y) {
    check_f_domain(x, y, 0.5);
    const double csc = 1.0 / std::sin(kPi * x * y);
    const double xt = (std::sin(kPi * x - kPi * x * y) - std::sin(kPi * x * y)) * csc;
    return 1.0 + y * std::hypot(1.0 + xt + std::cos(kPi * x), std::sin(kPi * x));
}

double g_plane(double x) { return 2.0 - x; }

double f_limit(double x) {
    if (!(x > 0.0 && x <= 0.5)) throw DomainError("f_limit: x outside (0, 1/2]");
    return 1.0 + std::sin(kPi * x) / (kPi * x);
}

double f_one_third(double x) {
    if (!(x > 0.0 && x <= 0.5)) throw DomainError("f_one_third: x outside (0, 1/2]");
    return (2.0 / 3.0) * (2.0 + std::cos(2.0 * kPi * x / 3.0));
}

double df_dy(double x, double y) {
    check_f_domain(x, y, 1.0 / 3.0);
    const double a = kPi * x * y;
    const double csc = 1.0 / std::sin(a);
    return csc * std::sin(kPi * x) - a * (std::cos(a) * csc) * csc * std::sin(kPi * x);
}

BoundsReport bounds_report(const Scenario& sc, const std::vector<OrbitRep>& reps,
                           long long cap, int threads) {
    std::vector<Event> events;
    for (const OrbitRep& rep : reps) {
        for (Event& ev : orbit_events(sc, rep)) events.push_back(std::move(ev));
    }
    const BellOperator bo = bell_operator(sc, reps);
    const QuantumBound full = quantum_bound_full(bo);
    const GramBound gb = quantum_bound_gram(gram_blocks(sc, reps), sc.group_order());
    const ClassicalResult cl = classical_bound(sc, events, cap, threads);

    BoundsReport report;
    report.scenario = sc;
    report.classical = cl.max_count;
    report.classical_witness = cl.strategy;
    report.quantum_full = full.value;
    report.quantum_gram = gb.value;
    report.route_delta = std::abs(full.value - gb.value);
    report.best_labels = gb.best_labels;
    report.per_label = gb.per_label;
    report.optimal_state = full.optimal_state;
    report.event_count = static_cast<int>(events.size());
    return report;
}

}  // namespace bellorbit
