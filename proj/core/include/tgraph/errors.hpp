#pragma once

#include <stdexcept>
#include <string>

namespace tgraph {

// Input outside an operation's domain (bad p, negative z, wrong branch range).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A numerical procedure failed to reach its tolerance.
class NonconvergenceError : public std::runtime_error {
public:
    NonconvergenceError(const std::string& what, double estimate, double error)
        : std::runtime_error(what), estimate_(estimate), error_(error) {}

    double estimate() const noexcept { return estimate_; }
    double error() const noexcept { return error_; }

private:
    double estimate_;
    double error_;
};

}  // namespace tgraph
