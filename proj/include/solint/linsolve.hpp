// Exact dense linear algebra over Rat: fraction-pivot Gaussian elimination.
#pragma once

#include "solint/rational.hpp"

#include <optional>
#include <vector>

namespace solint {

using RatMatrix = std::vector<std::vector<Rat>>;

// Solves A x = b exactly. A is rows x cols with rows >= cols allowed
// (overdetermined systems are fine as long as they are consistent).
// Returns nullopt when the system is inconsistent or the solution is
// not unique (rank < cols).
std::optional<std::vector<Rat>> solveExact(RatMatrix A, std::vector<Rat> b);

}  // namespace solint
