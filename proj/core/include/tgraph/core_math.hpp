#pragma once

#include <cmath>

namespace tgraph {

// Problem instance on the T-graph: two half-lines and a terminal edge of length ell.
struct Params {
    double p = 6.0;
    double lambda = 1.0;
    double ell = 1.0;

    void validate() const;
    // Terminal-edge length of the equivalent lambda = 1 problem.
    double normalized_ell() const { return ell * std::sqrt(lambda); }
};

enum class Branch { low, high, outer };

// f(z) = z^2/2 - z^p/p and friends. Immutable after construction.
class Potential {
public:
    explicit Potential(double p);

    double p() const { return p_; }
    double zmax() const { return zmax_; }
    double fmax() const { return fmax_; }

    double f(double z) const;
    // order-th derivative, order in 1..4
    double derivative(double z, int order) const;
    // f'(z) with full relative accuracy near z = 1
    double fprime(double z) const;
    // f(base + offset) - f(base) without cancellation for small offsets
    double difference(double base, double offset) const;
    // f(1 + d) - f(1), accurate for small d
    double from_center(double d) const;
    double inverse(double value, Branch branch) const;

private:
    double p_;
    double zmax_;
    double fmax_;
};

// F(x, y) = -y^2/2 + f(|x|); the phase-plane first integral.
double hamiltonian(const Potential& pot, double x, double y);

// phi(x) = A sech^{2/(p-2)}(b x), the positive even solution of -phi'' + lambda phi = phi^{p-1}.
class Soliton {
public:
    Soliton(double p, double lambda);

    double p() const { return p_; }
    double lambda() const { return lambda_; }
    double amplitude() const { return amp_; }
    double decay_rate() const { return rate_; }

    double operator()(double x) const { return value(x); }
    double value(double x) const;
    double deriv(double x) const;
    // phi'' taken from the equation itself
    double second(double x) const;
    // y >= 0 with phi(y) = v, 0 < v <= amplitude
    double inverse(double v) const;

private:
    double p_;
    double lambda_;
    double amp_;
    double rate_;
};

}  // namespace tgraph
