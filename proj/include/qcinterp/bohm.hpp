#pragma once

#include <vector>

#include "qcinterp/constants.hpp"
#include "qcinterp/grid.hpp"

namespace qcinterp {

// Relative density floor: densities below rho_floor_rel * max(rho) are
// clamped before any division by rho or sqrt(rho).
inline constexpr double rho_floor_rel = 1e-12;

// Q(x) = -(hbar^2/2m) (d^2 sqrt(rho)/dx^2) / sqrt(rho) by central
// differences, floor-regularized in the tails; endpoints copy their
// neighbours. The lambda argument only selects the regularization contract
// (the kernel itself is lambda-free; the evolution scales Q by lambda).
std::vector<double> quantum_potential(const WaveFunction& psi, InterpolationParam lambda,
                                      const PhysicalConstants& consts = {});

// v(x) = hbar Im(psi* dpsi/dx) / (m |psi|^2), central differences, density
// floor in the denominator; endpoints copy their neighbours.
std::vector<double> bohm_velocity(const WaveFunction& psi, const PhysicalConstants& consts = {});

struct TrajectorySet {
  std::vector<double> times;
  std::vector<std::vector<double>> positions;  // positions[p][k] = particle p at times[k]
  std::vector<double> seeds;
};

// Explicit-midpoint integration of dx/dt = v(x,t) through a stored evolution
// (uniform frame spacing), with v linearly interpolated in x and t.
// Throws TrajectoryEscaped when a path leaves the grid.
TrajectorySet integrate_trajectories(const std::vector<WaveFunction>& frames,
                                     const std::vector<double>& frame_times,
                                     const std::vector<double>& seeds,
                                     const PhysicalConstants& consts = {});

}  // namespace qcinterp
