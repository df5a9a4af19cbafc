#pragma once

#include <vector>

#include "qcinterp/constants.hpp"
#include "qcinterp/grid.hpp"
#include "qcinterp/potential.hpp"

namespace qcinterp {

// Symmetric tridiagonal finite-difference Hamiltonian
//   H = -(1-lambda) hbar^2/(2m) d^2/dx^2 + V(x)
// on the full grid with Dirichlet walls at the endpoints. All off-diagonal
// entries equal -(1-lambda) hbar^2 / (2 m dx^2).
struct DiscreteHamiltonian {
  Grid grid;
  std::vector<double> diagonal;      // length n_points
  std::vector<double> off_diagonal;  // length n_points - 1
  InterpolationParam lambda;

  // y = H x (Dirichlet: endpoint rows act like the full tridiagonal rows;
  // eigen solves restrict to the interior block).
  std::vector<double> apply(const std::vector<double>& x) const;
};

DiscreteHamiltonian build_hamiltonian(const Grid& grid, const PotentialSpec& potential,
                                      InterpolationParam lambda,
                                      const PhysicalConstants& consts = {});

// k lowest eigenpairs of the Dirichlet (interior-block) problem, energies
// ascending, states real, orthonormal under the trapezoid inner product.
// Sturm-sequence bisection for the values, shifted inverse iteration with
// cluster re-orthogonalization for the vectors.
struct EigenPair {
  double energy;
  WaveFunction state;
};

std::vector<EigenPair> solve_eigenstates(const DiscreteHamiltonian& H, long k);

}  // namespace qcinterp
