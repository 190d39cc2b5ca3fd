#ifndef SEIRDV_ERRORS_HPP
#define SEIRDV_ERRORS_HPP

#include <stdexcept>

namespace seirdv {

/// Bad or inconsistent run configuration (CLI exit code 2).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Missing, malformed or inconsistent input data (CLI exit code 3).
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Numerical failure such as a diverging integration (CLI exit code 4).
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace seirdv

#endif
