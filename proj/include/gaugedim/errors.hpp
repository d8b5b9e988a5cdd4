#ifndef GAUGEDIM_ERRORS_HPP
#define GAUGEDIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gaugedim {

/// Caller violated a documented precondition (maps to CLI exit code 2 when
/// raised during config validation, 1 otherwise).
class precondition_error : public std::invalid_argument {
public:
    explicit precondition_error(const std::string& what) : std::invalid_argument(what) {}
};

/// A configured size/node cap was exceeded.
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

/// Arithmetic left the exactly-representable range.
class overflow_error : public std::runtime_error {
public:
    explicit overflow_error(const std::string& what) : std::runtime_error(what) {}
};

/// A computation could not produce a result (e.g. bisection range does not
/// bracket a decision change). Carries endpoint diagnostics in what().
class no_bracket_error : public std::runtime_error {
public:
    explicit no_bracket_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace gaugedim

#endif
