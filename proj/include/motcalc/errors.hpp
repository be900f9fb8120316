#pragma once

#include <stdexcept>
#include <string>

#include "motcalc/integer.hpp"

namespace motcalc {

// Invalid input data: unknown root-system types, malformed fibre syntax,
// negative multiplicities, bad documents. Maps to CLI exit code 1.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A requested enumeration would exceed the configured orbit cap. Carries the
// estimated orbit size so callers can report it. Maps to CLI exit code 2.
class ResourceError : public std::runtime_error {
public:
    ResourceError(const std::string& message, Integer estimated_orbit)
        : std::runtime_error(message), estimated_orbit_(std::move(estimated_orbit)) {}

    const Integer& estimated_orbit_size() const { return estimated_orbit_; }

private:
    Integer estimated_orbit_;
};

// A consistency check that holds for every correct run has failed.
// Maps to CLI exit code 3.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace motcalc
