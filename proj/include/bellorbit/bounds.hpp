#ifndef BELLORBIT_BOUNDS_HPP_INCLUDED
#define BELLORBIT_BOUNDS_HPP_INCLUDED

#include <cstdint>
#include <vector>

#include "bellorbit/scenario.hpp"

namespace bellorbit {

/// Orbit-sum operator O = sum_t V^t (sum_reps |rep><rep|) V^-t with
/// V the diagonal tensor power of the root unitary.
struct BellOperator {
    Scenario scenario;
    std::vector<OrbitRep> reps;
    Matrix op;
};

BellOperator bell_operator(const Scenario& sc, const std::vector<OrbitRep>& reps,
                           Eigen::Index cap = kDefaultDimCap);

struct QuantumBound {
    double value = 0.0;
    Vector optimal_state;
};

/// Largest eigenvalue of O and its eigenstate, by full diagonalization.
QuantumBound quantum_bound_full(const BellOperator& bo);

/// Per-eigenvalue-label Gram matrix of the projected representatives.
struct GramBlock {
    int label = 0;
    Matrix m;                        // (#reps) x (#reps)
    std::vector<Vector> projected;   // psi_k = P_label |rep_k>
};

/// One block per label with a nonzero eigenspace.
std::vector<GramBlock> gram_blocks(const Scenario& sc, const std::vector<OrbitRep>& reps);

struct GramBound {
    double value = 0.0;              // group_order * max_label lambda_max(M)
    std::vector<int> best_labels;    // all labels within 1e-9 of the max
    std::vector<double> per_label;   // group_order * lambda_max(M_label), by block
};

GramBound quantum_bound_gram(const std::vector<GramBlock>& blocks, int group_order);

/// Deterministic local strategy and the number of events it satisfies.
struct ClassicalResult {
    long long max_count = 0;
    std::vector<std::vector<int>> strategy;  // [party][setting] -> outcome
};

inline constexpr long long kDefaultStrategyCap = 100'000'000;

/// Exact maximum over all local deterministic strategies of the number of
/// satisfied events. Strategy space is (n^d)^N; throws SizeError past `cap`.
ClassicalResult classical_bound(const Scenario& sc, const std::vector<Event>& events,
                                long long cap = kDefaultStrategyCap, int threads = 1);

/// The bipartite maximum eigenvalue of O in closed form; branch picked by
/// the parity of n.
double closed_form_bipartite(int n, int d);

/// Scaled bound f(x, y) with x = 1/d, y = 1/n, odd-n branch:
/// f = 1 + y + y (sin(pi x) - sin(pi x y)) csc(pi x y).
double f_odd(double x, double y);
/// Even-n branch: f = 1 + y sqrt((1 + X + cos(pi x))^2 + sin^2(pi x)),
/// X = (sin(pi x - pi x y) - sin(pi x y)) csc(pi x y).
double f_even(double x, double y);
/// Classical comparison plane g(x) = 2 - x.
double g_plane(double x);
/// Limit of f_odd as y -> 0: 1 + sin(pi x)/(pi x).
double f_limit(double x);
/// f_odd at y = 1/3: (2/3)(2 + cos(2 pi x / 3)).
double f_one_third(double x);
/// Analytic d f_odd / dy.
double df_dy(double x, double y);

/// Everything about one scenario's bounds, both quantum routes included.
struct BoundsReport {
    Scenario scenario;
    long long classical = 0;
    std::vector<std::vector<int>> classical_witness;
    double quantum_full = 0.0;
    double quantum_gram = 0.0;
    double route_delta = 0.0;
    std::vector<int> best_labels;
    std::vector<double> per_label;
    Vector optimal_state;
    int event_count = 0;
};

BoundsReport bounds_report(const Scenario& sc, const std::vector<OrbitRep>& reps,
                           long long cap = kDefaultStrategyCap, int threads = 1);

}  // namespace bellorbit

#endif
