#pragma once

#include <stdexcept>
#include <string>

namespace rsc {

// Error taxonomy shared by all modules.
//   domain_error      argument outside the mathematical domain (n=0, composite "prime", ...)
//   capacity_error    request exceeds a configured capacity limit
//   width_error       an exact integer result does not fit the declared width (no wrapping)
//   input_error       malformed or missing caller-supplied data
//   precision_error   requested accuracy unattainable at the working precision
//   consistency_error internal cross-check failed; indicates a bug, not a user error

struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct width_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct precision_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct consistency_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace rsc
