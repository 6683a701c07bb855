#pragma once

#include <stdexcept>
#include <string>

namespace dbt {

// Error families map onto CLI exit codes: config 2, numerical 3, I/O 4.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace dbt
