#pragma once

#include "qcinterp/constants.hpp"
#include "qcinterp/grid.hpp"

namespace qcinterp::box {

struct BoxSpec {
  double L;
  long n_max;

  void validate() const {
    if (!(L > 0.0)) throw OutOfRange("BoxSpec: L must be > 0");
    if (n_max < 1) throw OutOfRange("BoxSpec: n_max must be >= 1");
  }
};

// E_n = (1 - lambda) n^2 pi^2 hbar^2 / (2 m L^2). The amplitudes are
// lambda-independent; only the energies renormalize.
double box_energy(long n, const BoxSpec& box, InterpolationParam lambda,
                  const PhysicalConstants& consts = {});

// sqrt(2/L) sin(k_n (x + L/2)) sampled on a grid spanning [-L/2, L/2] and
// renormalized under the trapezoid rule.
WaveFunction box_wavefunction(long n, const BoxSpec& box, const Grid& grid);

}  // namespace qcinterp::box
