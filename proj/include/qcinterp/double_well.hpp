#pragma once

#include <array>

#include "qcinterp/constants.hpp"
#include "qcinterp/grid.hpp"
#include "qcinterp/hamiltonian.hpp"

namespace qcinterp::dwell {

struct DoubleWellSpec {
  double V0;
  double a;

  void validate() const {
    if (!(V0 > 0.0)) throw OutOfRange("DoubleWellSpec: V0 must be > 0");
    if (!(a > 0.0)) throw OutOfRange("DoubleWellSpec: a must be > 0");
  }
  double spring_constant() const { return 8.0 * V0 * a * a; }  // K = 8 V0 a^2
  double barrier_height() const { return V0 * a * a * a * a; }
};

// Harmonic expansion around the well minima under the renormalized mass
// m/(1-lambda):
//   omega^(l) = sqrt(8 V0 a^2 (1-lambda)/m),
//   alpha^(l) = (1/hbar) sqrt(2 V0 a^2 m/(1-lambda)).
// alpha diverges as lambda -> 1; harmonic_params refuses that limit.
struct HarmonicApprox {
  double K;
  double omega_lambda;
  double alpha_lambda;
  double m_lambda;
  InterpolationParam lambda;
};

HarmonicApprox harmonic_params(const DoubleWellSpec& well, InterpolationParam lambda,
                               const PhysicalConstants& consts = {});

// Normalized Gaussian (2 alpha/pi)^(1/4) exp(-alpha (x - center)^2) sampled
// on the grid; center is +a or -a. Requires the grid to cover at least
// 6 Gaussian widths around the center.
WaveFunction gaussian_state(const HarmonicApprox& approx, double center, const Grid& grid);

// Closed-form overlap P = exp(-2 alpha a^2) of the two well Gaussians.
double overlap(const HarmonicApprox& approx, const DoubleWellSpec& well);

// Tunneling coefficient from composite (trapezoid) quadrature of
//   (1/2) Delta = -(hbar^2/2m) int psi_- d^2x psi_+ dx
// over the whole grid, with the second derivative taken analytically from
// the Gaussian form. The value is signed: for alpha a^2 > 1/4 the convex
// tails dominate the integral and Delta comes out negative; callers that
// need the physical splitting magnitude take |Delta|.
double tunneling_coefficient(const HarmonicApprox& approx, const DoubleWellSpec& well,
                             const Grid& grid, const PhysicalConstants& consts = {});

// 2x2 symmetric matrix in row-major order {a00, a01, a10, a11}.
using Mat2 = std::array<double, 4>;

// Two-level reduction in the localized |+a>, |-a> basis:
//   diagonal  = enthalpy_offset + eps
//   off-diag  = (1-lambda) delta / 2.
struct TwoLevelSystem {
  double eps;              // diagonal energy, typically hbar omega^(l) / 2
  double delta;            // tunneling coefficient Delta^(l) (signed)
  double enthalpy_offset;  // Delta H^(l), 0 for the bare SHO form
  InterpolationParam lambda;

  Mat2 matrix() const;
  double off_diagonal() const { return (1.0 - lambda.value()) * 0.5 * delta; }
  // |(1-lambda) Delta|: the doublet splitting magnitude.
  double gap_magnitude() const;
};

TwoLevelSystem two_level_hamiltonian(double eps, double delta, double enthalpy_offset,
                                     InterpolationParam lambda);

// Doublet energies in the convention E_+/- = diag -/+ (1-lambda) Delta/2,
// attached to the symmetric/antisymmetric vectors (1,+-1)/sqrt(2).
struct Splitting {
  double E_plus;                  // symmetric combination
  double E_minus;                 // antisymmetric combination
  std::array<double, 2> sym;      // (1,1)/sqrt(2)
  std::array<double, 2> antisym;  // (1,-1)/sqrt(2)
  double gap() const { return E_minus - E_plus; }
};

Splitting splitting(const TwoLevelSystem& sys);

// P(t) = cos((1-lambda) Delta t / hbar): probability of the left well minus
// the right well for a system prepared in |+a> at t = 0.
double well_probability(double t, const TwoLevelSystem& sys, const PhysicalConstants& consts = {});

// Same observable through the actual unitary exp(-i H t/hbar) acting on
// |+a>, computed via closed-form 2x2 eigendecomposition. Independent route
// used to validate the cosine law.
double well_probability_evolved(double t, const TwoLevelSystem& sys,
                                const PhysicalConstants& consts = {});

// Oscillation period 2 pi hbar / |(1-lambda) Delta|; infinite at lambda = 1.
double oscillation_period(const TwoLevelSystem& sys, const PhysicalConstants& consts = {});

// rho = (p/2) I + ((1-p)/2) (|+a>+|-a>)(<+a|+<-a|); trace 1, PSD, commutes
// with every SHO-form two-level Hamiltonian.
struct TwoLevelDensityMatrix {
  double p;
  Mat2 matrix;
};

TwoLevelDensityMatrix density_matrix(double p);

// max-norm of [A, B].
double commutator_max_norm(const Mat2& A, const Mat2& B);

// Two lowest eigenvalues of the full quartic-potential Hamiltonian on the
// grid; validation oracle for the two-level reduction.
struct GridSplitting {
  double E0;
  double E1;
  double gap;
  WaveFunction ground;
  WaveFunction excited;
};

GridSplitting grid_splitting_oracle(const DoubleWellSpec& well, InterpolationParam lambda,
                                    const Grid& grid, const PhysicalConstants& consts = {});

}  // namespace qcinterp::dwell
