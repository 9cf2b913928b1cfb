#pragma once

#include <string>
#include <vector>

#include "tgraph/core_math.hpp"

namespace tgraph {

enum class StateKind { TypeA, TypeC };
enum class Edge { e1, e2, e3 };

std::string to_string(StateKind k);
std::string to_string(Edge e);

// One positive solution. Fields are in the units of `params` (physical lambda);
// half-line profiles are u1(x) = phi(x + y) and u2(x) = phi(x + y) for TypeA,
// u1(x) = phi(x + y) and u2(x) = phi(x - y) for TypeC.
struct BoundState {
    Params params;
    StateKind kind = StateKind::TypeA;
    double z = 0.0;        // u3(0)
    double y = 0.0;        // signed translation, see above
    int half_orbits = 0;   // TypeC only; 0 is the constant state u3 = 1
    int orientation = 0;   // TypeC: +1 puts the soliton maximum inside e1 (y < 0), -1 inside e2
    double level = 0.0;    // -u3'^2/2 + lambda u3^2/2 - u3^p/p along e3

    bool is_constant() const { return kind == StateKind::TypeC && half_orbits == 0; }
};

struct Counts {
    int A = 0;
    int B = 0;
    int C = 0;
};

struct SolutionSet {
    Params params;
    BoundState type_a;
    std::vector<BoundState> type_c;
    Counts counts;
};

struct EdgeProfile {
    Edge edge = Edge::e3;
    std::vector<double> xs;
    std::vector<double> us;
    std::vector<double> dus;
};

struct Observables {
    double mass = 0.0;
    double lp_norm_p = 0.0;  // int u^p
    double grad_sq = 0.0;    // int u'^2
    double energy = 0.0;
    double action = 0.0;
    double sup = 0.0;
};

// Roots of the C branch closer than this to z = 1 are merged with the constant states.
inline constexpr double kCenterMergeTol = 1e-7;

BoundState solve_type_a(const Params& params);
SolutionSet enumerate(const Params& params);
// Half-line profiles are truncated where phi drops below 1e-12; e3 carries at least n_samples points.
EdgeProfile reconstruct_edge(const BoundState& state, Edge edge, int n_samples);
Observables observables(const BoundState& state);
// Same state transported to frequency new_lambda on the scaled graph (ell -> ell sqrt(lambda/new_lambda)).
BoundState rescale(const BoundState& state, double new_lambda);

// Scale factors between the lambda problem and the normalized lambda = 1 problem.
double amplitude_scale(double p, double lambda);  // u = lambda^{1/(p-2)} u_1
double level_scale(double p, double lambda);      // lambda^{p/(p-2)}
double mass_scale(double p, double lambda);       // lambda^{(6-p)/(2(p-2))}
double lp_scale(double p, double lambda);         // lambda^{(p+2)/(2(p-2))}, also for int u'^2 and energy

// Normalized (lambda = 1) vertex data of e3: u3(0) and u3'(0).
double normalized_z(const BoundState& s);

}  // namespace tgraph
