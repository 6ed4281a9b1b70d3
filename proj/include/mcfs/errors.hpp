#ifndef MCFS_ERRORS_HPP
#define MCFS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mcfs {

// Evaluation outside the profile's interval, an empty bracket, a query
// outside a trajectory's range, and similar argument-domain problems.
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or inconsistent configuration: bad step sizes, unknown profile
// names, infeasible problem setups (periodic translator with c != 0), ...
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// An iterative solver failed to reach its tolerance (Newton stagnation,
// eigenvalue iteration stall, immediate ODE blow-up).
class nonconvergence_error : public std::runtime_error {
public:
    explicit nonconvergence_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace mcfs

#endif
