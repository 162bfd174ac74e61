#pragma once

#include <stdexcept>
#include <string>

namespace tpv {

/// Raised when an enumeration or sweep would exceed its work budget.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a cost-guarded operation is asked for an order above its cap.
struct OrderCapExceeded : std::runtime_error {
    explicit OrderCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tpv
