#pragma once

#include <vector>

#include "qcinterp/constants.hpp"
#include "qcinterp/grid.hpp"
#include "qcinterp/potential.hpp"

namespace qcinterp {

struct EvolveOptions {
  PhysicalConstants consts = {};
  long store_every = 1;          // keep every k-th frame (frame 0 always kept)
  double picard_tol = 1e-10;     // max-norm tolerance on successive iterates
  int picard_max_iter = 50;
};

struct Evolution {
  std::vector<double> times;          // times of stored frames
  std::vector<WaveFunction> frames;   // stored frames (frames[0] = psi0)
  std::vector<int> picard_iterations; // per *step* iteration counts (length = steps)
};

// Crank-Nicolson time stepping of
//   i hbar dpsi/dt = [H_qm - lambda Q[rho]] psi
// with Q lagged at the step midpoint density and updated by fixed-point
// (Picard) iteration until the successive-iterate max-norm drops below
// picard_tol (throws PicardDivergence past picard_max_iter). Each inner
// solve applies the same Hermitian operator on both Cayley sides, so the
// step is unitary independent of how far the Picard loop has converged.
//
// Stability note: the scheme is A-stable; accuracy requires
// dt * max|H| / hbar to be small (O(dt^2) splitting of the nonlinearity).
Evolution evolve(const WaveFunction& psi0, const PotentialSpec& potential,
                 InterpolationParam lambda, double dt, long steps,
                 const EvolveOptions& opt = {});

}  // namespace qcinterp
