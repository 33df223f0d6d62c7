#pragma once

#include <Eigen/Dense>
#include <complex>

namespace ludersgap {

using Mat3 = Eigen::Matrix3cd;
using Vec3 = Eigen::Vector3cd;

// Spin-1 angular momentum along x, computational basis, hbar = 1.
Mat3 jx_spin1();

struct Unitary {
  Mat3 mat;
  explicit Unitary(Mat3 m);  // rejects non-unitary input (1e-10)
};

// exp(i g Jx), analytic via Jx^3 = Jx.
Unitary propagator(double g);

struct DensityMatrix {
  Mat3 mat;
  explicit DensityMatrix(Mat3 m);  // Hermitian/trace-1/PSD checks
};

// |v><v| for a unit vector (norm within 1e-12).
DensityMatrix pure_state(const Vec3& v);

}  // namespace ludersgap
