#pragma once

#include <cmath>

#include "qcinterp/errors.hpp"

namespace qcinterp {

// Physical constants entering the formulas. Defaults give the internal
// dimensionless system (hbar = m = k_B = 1); pass scaled values to work in
// physical units (e.g. hbar in J*s, or hbar*N_A in J*s/mol for molar output).
struct PhysicalConstants {
  double hbar = 1.0;
  double mass = 1.0;
  double k_B = 1.0;

  void validate() const {
    if (!(hbar > 0.0) || !(mass > 0.0) || !(k_B > 0.0))
      throw OutOfRange("PhysicalConstants: hbar, mass and k_B must be strictly positive");
  }
};

// The quantum-classical blending parameter. 0 is fully quantum, 1 fully
// classical; values outside [0,1] are rejected at construction, never clamped.
class InterpolationParam {
 public:
  InterpolationParam() = default;

  double value() const { return lambda_; }
  double quantum_weight() const { return 1.0 - lambda_; }
  bool is_classical_limit(double tol = 1e-6) const { return lambda_ > 1.0 - tol; }

  friend InterpolationParam make_lambda(double x);

 private:
  explicit InterpolationParam(double v) : lambda_(v) {}
  double lambda_ = 0.0;
};

inline InterpolationParam make_lambda(double x) {
  if (!(x >= 0.0 && x <= 1.0))
    throw OutOfRange("lambda must lie in [0,1], got " + std::to_string(x));
  return InterpolationParam(x);
}

// Sinusoidal drive lambda(t) = |sin(Omega t)| used by the LDL/HDL model.
struct DriveSpec {
  double omega_drive;  // angular frequency of the drive
  double t_start;
  double t_end;
  long n_samples;

  void validate() const {
    if (!(omega_drive > 0.0)) throw OutOfRange("DriveSpec: omega_drive must be > 0");
    if (!(t_end > t_start)) throw OutOfRange("DriveSpec: t_end must exceed t_start");
    if (n_samples < 2) throw OutOfRange("DriveSpec: n_samples must be >= 2");
  }
};

// lambda(t) = |sin(Omega t)|, always in [0,1]. Note: at t = (n+1/4)pi/Omega
// this evaluates to sqrt(2)/2, not the 1/2 sometimes quoted for that phase;
// the formula is implemented literally.
inline InterpolationParam lambda_drive(const DriveSpec& drive, double t) {
  double v = std::fabs(std::sin(drive.omega_drive * t));
  if (v > 1.0) v = 1.0;  // guard against fabs(sin) rounding above 1
  return make_lambda(v);
}

}  // namespace qcinterp
