#pragma once

#include <stdexcept>
#include <string>

namespace weakeq {

/// Malformed or inconsistent input (bad file, dimension mismatch, ...).
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A computation was refused because it exceeds a configured budget.
/// The message always names the violated budget.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace weakeq
