#pragma once

#include <stdexcept>
#include <string>

namespace pegsim {

/// Bad scenario file or physically insane parameter set. CLI maps this to exit code 1.
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

/// Failure while integrating (step size too coarse, unwritable output, ...).
/// CLI maps this to exit code 2.
class simulation_error : public std::runtime_error {
public:
    explicit simulation_error(const std::string& what) : std::runtime_error(what) {}
};

/// Caller broke an API contract (out-of-order query on a stateful source,
/// bracket without a sign change, ...).
class contract_violation : public std::logic_error {
public:
    explicit contract_violation(const std::string& what) : std::logic_error(what) {}
};

} // namespace pegsim
