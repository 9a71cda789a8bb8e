#pragma once

#include <stdexcept>
#include <string>

namespace rsieve {

// Raised when a sieve's internal state contradicts one of its invariants.
// This always indicates a defect, never bad input.
class InvariantViolation : public std::logic_error {
public:
    explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

} // namespace rsieve
