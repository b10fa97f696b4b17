#pragma once

#include "seedgo/portfolio.hpp"

namespace seedgo::oracle {

struct OracleResult {
  bool found = false;
  double value = 0.0;
  MixedStrategy x;
  MixedStrategy y;
};

// Reference game solver by support enumeration, independent of solve_nash:
// for each equal-size support pair it solves the equalizing linear systems
// by Gaussian elimination and verifies non-negativity plus the no-profitable-
// deviation conditions. Every constant-sum game has an equilibrium with
// equal-size supports (a square kernel), so enumeration always succeeds.
// Exponential in the matrix size; intended for matrices up to ~10x10.
OracleResult support_enumeration(const Matrix& m, double tol = 1e-9);

}  // namespace seedgo::oracle
