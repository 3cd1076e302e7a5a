#pragma once

#include <vector>

#include "diagcat/diagram.hpp"

namespace diagcat {

inline constexpr int kDefaultBudgetPoints = 32;

// All valid diagrams with the given signature in canonical sorted order.
// Throws BudgetExceeded when the boundary has more than budget_points points.
std::vector<Diagram> enumerate_diagrams(Kind kind, int dom, int cod,
                                        int budget_points = kDefaultBudgetPoints);

// Number of valid diagrams, computed by interval counting without
// materializing them.  Subject to the same budget.
long long dimension(Kind kind, int dom, int cod,
                    int budget_points = kDefaultBudgetPoints);

}  // namespace diagcat
