#pragma once

#include <stdexcept>

namespace cantorian {

// Bad user-supplied data (letters out of range, dimension mismatch, ...).
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A computation was refused because it exceeds a configured budget.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An internal cross-check failed; indicates a bug, not bad input.
struct consistency_error : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace cantorian
