#ifndef LADDERLAB_ERRORS_HPP
#define LADDERLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ladderlab {

// Argument outside a function's mathematical domain (ln(0), division by zero).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// An iterative scheme failed to reach the requested accuracy.
struct NonConvergence : std::runtime_error {
    explicit NonConvergence(const std::string& what) : std::runtime_error(what) {}
};

// A series was evaluated outside its region of convergence.
struct DivergentSeries : std::runtime_error {
    explicit DivergentSeries(const std::string& what) : std::runtime_error(what) {}
};

// An integrand denominator root entered the integration interval.
struct SingularParameter : std::runtime_error {
    explicit SingularParameter(const std::string& what) : std::runtime_error(what) {}
};

// Working precision too low for the requested detection bound.
struct PrecisionExhausted : std::runtime_error {
    explicit PrecisionExhausted(const std::string& what) : std::runtime_error(what) {}
};

// Lookup of an unregistered identity / constant / integral id.
struct UnknownId : std::invalid_argument {
    explicit UnknownId(const std::string& what) : std::invalid_argument(what) {}
};

// Identity parameters violate the case's documented parameter region.
struct ParameterOutOfRegion : std::invalid_argument {
    explicit ParameterOutOfRegion(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace ladderlab

#endif
