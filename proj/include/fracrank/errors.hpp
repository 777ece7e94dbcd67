#pragma once

#include <stdexcept>
#include <string>

namespace fracrank {

/// Numerical failure inside an otherwise valid computation (as opposed to
/// malformed input, which is reported as std::invalid_argument). The CLI maps
/// the two families to distinct exit codes.
struct numerical_error : std::runtime_error {
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

/// The band-averaged spectral matrix is (near-)singular, e.g. under
/// near-perfect collinearity of two columns over the estimation band.
struct singular_matrix_error : numerical_error {
    explicit singular_matrix_error(const std::string& what) : numerical_error(what) {}
};

/// A critical-value table does not contain the requested cell.
struct missing_critical_value : std::invalid_argument {
    explicit missing_critical_value(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace fracrank
