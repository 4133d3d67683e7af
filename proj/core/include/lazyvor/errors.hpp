#ifndef LAZYVOR_ERRORS_HPP
#define LAZYVOR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lazyvor {

/// A request that is well-formed but mathematically invalid for the given
/// data (non-member site, empty set where a nonempty one is required, ...).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// A malformed input document or command line: source specs that fail
/// validation, unparsable scalars, bad expressions.
class SpecError : public std::runtime_error {
public:
    explicit SpecError(const std::string& what) : std::runtime_error(what) {}
};

/// Candidate enumeration exceeded the configured budget.
class BudgetExceeded : public DomainError {
public:
    explicit BudgetExceeded(const std::string& what) : DomainError(what) {}
};

} // namespace lazyvor

#endif
