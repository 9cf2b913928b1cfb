#pragma once

#include <boost/math/tools/roots.hpp>

#include <cstdint>
#include <limits>
#include <string>

#include "tgraph/errors.hpp"

namespace tgraph::detail {

// TOMS 748 on a sign-changing bracket, solved to near machine precision.
template <class F>
double solve_bracket(F&& fn, double lo, double hi, const char* what, int bits = std::numeric_limits<double>::digits - 3) {
    std::uintmax_t iters = 400;
    boost::math::tools::eps_tolerance<double> tol(bits);
    auto r = boost::math::tools::toms748_solve(fn, lo, hi, tol, iters);
    if (iters >= 400) throw NonconvergenceError(std::string(what) + ": root solve did not converge", 0.5 * (r.first + r.second), r.second - r.first);
    return 0.5 * (r.first + r.second);
}

template <class F>
double solve_bracket(F&& fn, double lo, double hi, double flo, double fhi, const char* what, int bits = std::numeric_limits<double>::digits - 3) {
    std::uintmax_t iters = 400;
    boost::math::tools::eps_tolerance<double> tol(bits);
    auto r = boost::math::tools::toms748_solve(fn, lo, hi, flo, fhi, tol, iters);
    if (iters >= 400) throw NonconvergenceError(std::string(what) + ": root solve did not converge", 0.5 * (r.first + r.second), r.second - r.first);
    return 0.5 * (r.first + r.second);
}

}  // namespace tgraph::detail
