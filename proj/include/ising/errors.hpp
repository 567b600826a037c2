#ifndef ISING_ERRORS_HPP
#define ISING_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ising {

// Base class for all library errors so callers can catch everything at once.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

class domain_error : public error {
public:
    explicit domain_error(const std::string& msg) : error(msg) {}
};

class precision_error : public error {
public:
    explicit precision_error(const std::string& msg) : error(msg) {}
};

class convergence_error : public error {
public:
    explicit convergence_error(const std::string& msg) : error(msg) {}
};

class cap_exceeded_error : public error {
public:
    explicit cap_exceeded_error(const std::string& msg) : error(msg) {}
};

class parity_error : public error {
public:
    explicit parity_error(const std::string& msg) : error(msg) {}
};

// Exact linear solves: the overdetermined rows disagree with the solution.
class inconsistent_system_error : public error {
public:
    explicit inconsistent_system_error(const std::string& msg) : error(msg) {}
};

class underdetermined_error : public error {
public:
    explicit underdetermined_error(const std::string& msg) : error(msg) {}
};

class not_found_error : public error {
public:
    explicit not_found_error(const std::string& msg) : error(msg) {}
};

// PIII integration ran into a pole; carries the location.
class pole_error : public error {
public:
    pole_error(const std::string& msg, double where) : error(msg), location(where) {}
    double location;
};

class usage_error : public error {
public:
    explicit usage_error(const std::string& msg) : error(msg) {}
};

// Internal consistency failure (e.g. the pi cancellation in the exact
// integration engine); always indicates an implementation bug.
class internal_error : public error {
public:
    explicit internal_error(const std::string& msg) : error(msg) {}
};

} // namespace ising

#endif
