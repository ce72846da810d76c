// SPDX-License-Identifier: Apache-2.0
#ifndef RUNTX_ERRORS_HPP
#define RUNTX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace runtx {

// Enumeration request exceeds the configured desk-scale budget.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace runtx

#endif
