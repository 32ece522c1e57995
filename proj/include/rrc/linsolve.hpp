#pragma once

#include <vector>

#include "rrc/qseries.hpp"

namespace rrc {

struct LinearSolution {
  bool consistent = false;
  int rank = 0;
  /// One solution, free variables set to zero; empty when inconsistent.
  std::vector<Rational> x;
};

/// Exact Gauss-Jordan elimination of A x = b over the rationals.
LinearSolution solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b);

}  // namespace rrc
