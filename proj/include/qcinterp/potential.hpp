#pragma once

#include <cmath>
#include <variant>
#include <vector>

#include "qcinterp/errors.hpp"
#include "qcinterp/grid.hpp"

namespace qcinterp {

// Infinite square well of width L centred on the origin. Realized on the
// grid as zero interior potential with Dirichlet walls at +-L/2; the grid
// must span exactly [-L/2, L/2].
struct BoxPotential {
  double L;
};

// V(x) = K x^2 / 2.
struct HarmonicPotential {
  double K;

  static HarmonicPotential from_omega(double omega, double mass) {
    return HarmonicPotential{mass * omega * omega};
  }
  double omega(double mass) const { return std::sqrt(K / mass); }
};

// V(x) = V0 (x^2 - a^2)^2, minima at +-a, barrier height V0 a^4.
struct DoubleWellPotential {
  double V0;
  double a;
  double barrier_height() const { return V0 * a * a * a * a; }
};

// Piecewise-linear interpolation of tabulated samples.
struct TabulatedPotential {
  std::vector<double> x;
  std::vector<double> v;
};

using PotentialSpec =
    std::variant<BoxPotential, HarmonicPotential, DoubleWellPotential, TabulatedPotential>;

// Point evaluation. For Box the interior value is 0 (walls live in the
// boundary conditions, not in V).
double evaluate_potential(const PotentialSpec& pot, double x);

// Samples V on every grid node. Throws GridMismatch when a Box does not
// coincide with the grid span or a table does not cover it.
std::vector<double> sample_potential(const PotentialSpec& pot, const Grid& grid);

}  // namespace qcinterp
