#ifndef WMCODES_ERRORS_HPP
#define WMCODES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wmc {

/// Two operands belong to different field contexts.
struct field_mismatch_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct division_by_zero_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// Matrix shapes or scalar domains incompatible with the requested operation.
struct shape_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct singular_matrix_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// An ingredient (weighing matrix, design, generator file, ...) failed
/// one of its defining identities.  The message names the first failure.
struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Enumeration would exceed the configured work cap.
struct cap_exceeded_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace wmc

#endif
