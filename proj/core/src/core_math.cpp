#include "tgraph/core_math.hpp"

#include <cstdint>
#include <limits>
#include <string>

#include "tgraph/errors.hpp"
#include "roots.hpp"

namespace tgraph {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require_p(double p) {
    if (!(p > 2.0) || !std::isfinite(p)) throw DomainError("exponent p must be > 2, got " + std::to_string(p));
}

template <class F>
double bracket_root(F&& fn, double lo, double hi) {
    return detail::solve_bracket(fn, lo, hi, "branch inverse");
}

// log sech(u) for any real u, overflow free
double log_sech(double u) {
    u = std::fabs(u);
    return -u + std::log(2.0) - std::log1p(std::exp(-2.0 * u));
}

}  // namespace

void Params::validate() const {
    require_p(p);
    if (!(lambda > 0.0) || !std::isfinite(lambda)) throw DomainError("lambda must be positive");
    if (!(ell > 0.0) || !std::isfinite(ell)) throw DomainError("ell must be positive");
}

Potential::Potential(double p) : p_(p) {
    require_p(p);
    zmax_ = std::pow(p / 2.0, 1.0 / (p - 2.0));
    fmax_ = 0.5 - 1.0 / p;
}

double Potential::f(double z) const {
    if (z < 0.0) throw DomainError("f evaluated at negative z");
    if (z == 0.0) return 0.0;
    // z^2/2 (1 - (z/zmax)^{p-2}); exact zero at zmax, no cancellation near it
    return -0.5 * z * z * std::expm1((p_ - 2.0) * std::log(z / zmax_));
}

double Potential::fprime(double z) const {
    if (z < 0.0) throw DomainError("f' evaluated at negative z");
    if (z == 0.0) return 0.0;
    return -z * std::expm1((p_ - 2.0) * std::log(z));
}

double Potential::derivative(double z, int order) const {
    if (z < 0.0) throw DomainError("derivative evaluated at negative z");
    const double p = p_;
    switch (order) {
        case 1: return fprime(z);
        case 2: return 1.0 - (p - 1.0) * std::pow(z, p - 2.0);
        case 3: return -(p - 1.0) * (p - 2.0) * std::pow(z, p - 3.0);
        case 4: return -(p - 1.0) * (p - 2.0) * (p - 3.0) * std::pow(z, p - 4.0);
        default: throw DomainError("derivative order must be in 1..4");
    }
}

double Potential::difference(double base, double offset) const {
    const double t = base + offset;
    if (base < 0.0 || t < 0.0) throw DomainError("difference evaluated at negative argument");
    if (base == 0.0 || std::fabs(offset) > 0.5 * base) return f(t) - f(base);
    return offset * (base + 0.5 * offset) - std::pow(base, p_) * std::expm1(p_ * std::log1p(offset / base)) / p_;
}

double Potential::from_center(double d) const {
    if (std::fabs(d) >= 0.05) return difference(1.0, d);
    // -sum_{k>=2} c_k d^k with c_2 = (p-2)/2, c_k = binom(p,k)/p
    double binom = p_ * (p_ - 1.0) / 2.0;
    double dk = d * d;
    double sum = 0.5 * (p_ - 2.0) * dk;
    for (int k = 3; k < 80; ++k) {
        binom *= (p_ - (k - 1)) / k;
        dk *= d;
        const double term = binom / p_ * dk;
        sum += term;
        if (std::fabs(term) < 1e-18 * std::fabs(sum)) break;
    }
    return -sum;
}

double Potential::inverse(double value, Branch branch) const {
    if (std::isnan(value)) throw DomainError("inverse of NaN");
    switch (branch) {
        case Branch::low: {
            if (value < 0.0 || value > fmax_) throw DomainError("low-branch inverse needs value in [0, f(1)]");
            if (value == 0.0) return 0.0;
            if (value == fmax_) return 1.0;
            if (value < 1e-3) {
                // log-space for tiny targets; t ~ sqrt(2 value)
                const double lv = std::log(value);
                auto g = [&](double s) { return std::log(f(std::exp(s))) - lv; };
                return std::exp(bracket_root(g, std::log(value) * 0.5 - 1.0, std::log(0.5)));
            }
            return bracket_root([&](double t) { return f(t) - value; }, 0.0, 1.0);
        }
        case Branch::high: {
            if (value < 0.0 || value > fmax_) throw DomainError("high-branch inverse needs value in [0, f(1)]");
            if (value == 0.0) return zmax_;
            if (value == fmax_) return 1.0;
            return bracket_root([&](double t) { return f(t) - value; }, 1.0, zmax_);
        }
        case Branch::outer: {
            if (value > fmax_) throw DomainError("outer-branch inverse needs value <= f(1)");
            if (value == fmax_) return 1.0;
            if (value == 0.0) return zmax_;
            if (value > 0.0) return bracket_root([&](double t) { return f(t) - value; }, 1.0, zmax_);
            double hi = 2.0 * zmax_;
            while (f(hi) > value) {
                hi *= 2.0;
                if (!std::isfinite(hi)) throw NonconvergenceError("outer inverse bracket overflow", kNaN, kNaN);
            }
            return bracket_root([&](double t) { return f(t) - value; }, zmax_, hi);
        }
    }
    throw DomainError("unknown branch");
}

double hamiltonian(const Potential& pot, double x, double y) { return -0.5 * y * y + pot.f(std::fabs(x)); }

Soliton::Soliton(double p, double lambda) : p_(p), lambda_(lambda) {
    require_p(p);
    if (!(lambda > 0.0)) throw DomainError("lambda must be positive");
    amp_ = std::pow(p * lambda / 2.0, 1.0 / (p - 2.0));
    rate_ = (p - 2.0) * std::sqrt(lambda) / 2.0;
}

double Soliton::value(double x) const { return amp_ * std::exp(2.0 / (p_ - 2.0) * log_sech(rate_ * x)); }

double Soliton::deriv(double x) const { return -std::sqrt(lambda_) * std::tanh(rate_ * x) * value(x); }

double Soliton::second(double x) const {
    const double v = value(x);
    return lambda_ * v - std::pow(v, p_ - 1.0);
}

double Soliton::inverse(double v) const {
    if (!(v > 0.0) || v > amp_ * (1.0 + 1e-15)) throw DomainError("soliton inverse needs 0 < v <= amplitude");
    if (v >= amp_) return 0.0;
    // cosh(b y) = (A/v)^{(p-2)/2} = 1 + e
    const double c = 0.5 * (p_ - 2.0) * std::log(amp_ / v);
    if (c > 30.0) return (std::log(2.0) + c + std::log1p(-std::exp(-2.0 * c)) / 2.0) / rate_;
    const double e = std::expm1(c);
    return std::log1p(e + std::sqrt(e * (2.0 + e))) / rate_;
}

}  // namespace tgraph
