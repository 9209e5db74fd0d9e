#ifndef CARLITZ_ERRORS_HPP
#define CARLITZ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace carlitz {

// Violated precondition (wrong domain, non-monic input, zero divisor, ...).
// The CLI maps this to exit code 1.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Malformed textual input (polynomial grammar, field element grammar, flags).
// The CLI maps this to exit code 2.
class ParseError : public std::invalid_argument {
public:
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace carlitz

#endif
