#pragma once

#include <span>
#include <vector>

#include "shs/grid.hpp"

namespace shs {

/// Implicit-Euler heat step (I - dt * Lap_h) u' = u with the 3-point
/// Laplacian and mirror ghost nodes at both ends. The matrix is a diagonally
/// dominant M-matrix; its Thomas factorization is computed once per dt.
///
/// The operator conserves integrate(u) (trapezoid weights) and maps
/// nonnegative data to nonnegative data.
class NeumannHeatStep {
 public:
  NeumannHeatStep(const Domain1D& domain, double dt);

  double dt() const noexcept { return dt_; }
  const Domain1D& domain() const noexcept { return domain_; }

  /// Solves in place; u.size() must equal the node count.
  void apply(std::span<double> u) const;

 private:
  Domain1D domain_;
  double dt_;
  std::vector<double> lower_;      // coefficient on u_{i-1} in row i
  std::vector<double> upper_mod_;  // c'_i after forward elimination
  std::vector<double> inv_pivot_;  // 1 / m_i
};

/// One implicit Euler heat step of length dt.
ScalarField diffusion_substep(const ScalarField& u, double dt);

/// Discrete Neumann eigenvalue (2/h^2)(1 - cos(k pi h / L)) of -Lap_h for the
/// mode cos(k pi x / L).
double neumann_eigenvalue(const Domain1D& domain, int k);

}  // namespace shs
