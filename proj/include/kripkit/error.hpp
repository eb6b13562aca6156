#pragma once

#include <stdexcept>
#include <string>

namespace kripkit {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an operation refuses to run because an explicit budget would
// be exceeded. Refusal is loud by contract; callers that want to proceed
// must raise the budget themselves.
struct BudgetError : Error {
    explicit BudgetError(const std::string& what) : Error(what) {}
};

}  // namespace kripkit
