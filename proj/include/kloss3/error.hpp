#pragma once

#include <stdexcept>
#include <string>

namespace kloss3 {

/// Raised when an argument violates an operation's documented precondition.
/// The message names the violated invariant.
class precondition_error : public std::invalid_argument {
public:
    explicit precondition_error(const std::string& what) : std::invalid_argument(what) {}
};

class not_invertible_error : public precondition_error {
public:
    explicit not_invertible_error(const std::string& what) : precondition_error(what) {}
};

class overflow_guard_error : public precondition_error {
public:
    explicit overflow_guard_error(const std::string& what) : precondition_error(what) {}
};

/// Gamma factor evaluated at a pole that is not cancelled by a zero.
class pole_error : public std::domain_error {
public:
    explicit pole_error(const std::string& what) : std::domain_error(what) {}
};

class convergence_error : public std::runtime_error {
public:
    explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace kloss3
