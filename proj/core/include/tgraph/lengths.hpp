#pragma once

#include <vector>

#include "tgraph/core_math.hpp"

namespace tgraph {

enum class LengthKind { A, C_low, C_high };

struct LengthBranch {
    LengthKind kind;
    double p;
    double lo;  // open interval (lo, hi) in z; the A branch also includes hi = zmax
    double hi;
};

LengthBranch length_branch(double p, LengthKind kind);

// Terminal-edge length of the type-A candidate with vertex value z, z in (0, zmax].
double length_A(double p, double z);
double invert_length_A(double p, double ell);

// Transit length of one half-orbit through z, z in (0,1) or (1,zmax).
double length_C(double p, double z);
double length_C_at_center(double p);
double ell_star(double p, double lambda);
double invert_length_C(double p, double ell, LengthKind branch);
double length_n(double p, double z, int n);

// Other turning point of the bounded orbit through z (z != 1).
double turning_partner(double p, double z);

// int_0^ell u3^q and int_0^ell u3'^2 on the terminal edge.
double edge_moment_A(double p, double z, double q);
double edge_gradient_A(double p, double z);
double edge_moment_C(double p, double z, double q, int n);
double edge_gradient_C(double p, double z, int n);

// Samples of one monotone sweep along an orbit: x from 0, u increasing, du >= 0.
struct SweepNode {
    double x;
    double u;
    double du;
};
// Type-A sweep from z (x = 0) to the outer turning point (x = L(z)); max x spacing <= dx.
std::vector<SweepNode> sweep_A(double p, double z, double dx);
// Type-C half-orbit from the lower to the upper turning point.
std::vector<SweepNode> sweep_C(double p, double z, double dx);

}  // namespace tgraph
