#pragma once

#include <complex>
#include <vector>

#include "qcinterp/errors.hpp"

namespace qcinterp {

using complexd = std::complex<double>;

// Uniform 1D grid. Endpoints are the Dirichlet walls of the computational box.
struct Grid {
  double x_min;
  double x_max;
  long n_points;

  Grid(double xmin, double xmax, long n) : x_min(xmin), x_max(xmax), n_points(n) {
    if (!(x_max > x_min)) throw OutOfRange("Grid: x_max must exceed x_min");
    if (n_points < 16) throw OutOfRange("Grid: need at least 16 points");
  }

  double dx() const { return (x_max - x_min) / static_cast<double>(n_points - 1); }
  double point(long i) const { return x_min + static_cast<double>(i) * dx(); }
  bool contains(double x) const { return x >= x_min && x <= x_max; }

  bool operator==(const Grid& o) const {
    return x_min == o.x_min && x_max == o.x_max && n_points == o.n_points;
  }
};

// Trapezoidal weight of node i (dx/2 at the walls, dx inside).
inline double trapezoid_weight(const Grid& g, long i) {
  double dx = g.dx();
  return (i == 0 || i == g.n_points - 1) ? 0.5 * dx : dx;
}

// Complex amplitudes sampled on a grid. Immutable by convention: operations
// return new values rather than mutating in place.
class WaveFunction {
 public:
  WaveFunction(Grid grid, std::vector<complexd> amplitudes)
      : grid_(grid), amp_(std::move(amplitudes)) {
    if (static_cast<long>(amp_.size()) != grid_.n_points)
      throw GridMismatch("WaveFunction: amplitude count does not match grid");
  }

  const Grid& grid() const { return grid_; }
  const std::vector<complexd>& amplitudes() const { return amp_; }
  complexd operator[](long i) const { return amp_[static_cast<size_t>(i)]; }
  long size() const { return grid_.n_points; }

  // L2 norm under the trapezoid rule.
  double norm() const;

  // Copy rescaled to unit norm.
  WaveFunction normalized() const;

  // rho(x) = |psi(x)|^2.
  std::vector<double> density() const;

  // Phase S(x) = hbar * arg(psi), unwrapped along the grid; meaningful only
  // where the density is appreciable.
  std::vector<double> phase(double hbar = 1.0) const;

  // <x> and sqrt(<x^2> - <x>^2) of the density.
  double mean_position() const;
  double width() const;

 private:
  Grid grid_;
  std::vector<complexd> amp_;
};

// Inner product <a|b> under the trapezoid rule.
complexd inner_product(const WaveFunction& a, const WaveFunction& b);

// Real Gaussian packet with optional plane-wave phase:
// psi ~ exp(-(x-center)^2/(4 sigma^2) + i p x / hbar), normalized. The
// density width of the result is sigma.
WaveFunction gaussian_packet(const Grid& grid, double center, double sigma, double momentum,
                             double hbar = 1.0);

}  // namespace qcinterp
