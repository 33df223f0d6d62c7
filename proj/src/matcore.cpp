#include "ludersgap/matcore.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ludersgap {

Mat3 jx_spin1() {
  const double s = 1.0 / std::sqrt(2.0);
  Mat3 j = Mat3::Zero();
  j(0, 1) = s;
  j(1, 0) = s;
  j(1, 2) = s;
  j(2, 1) = s;
  return j;
}

namespace {
const Mat3 kJx = jx_spin1();
const Mat3 kJx2 = kJx * kJx;
}  // namespace

Unitary::Unitary(Mat3 m) : mat(std::move(m)) {
  const double dev = (mat * mat.adjoint() - Mat3::Identity()).cwiseAbs().maxCoeff();
  if (!(dev < 1e-10)) {
    std::ostringstream os;
    os << "not unitary: |U U^dag - I| = " << dev;
    throw std::invalid_argument(os.str());
  }
}

Unitary propagator(double g) {
  if (!std::isfinite(g)) throw std::invalid_argument("propagator: coupling must be finite");
  const std::complex<double> i01(0.0, 1.0);
  return Unitary(Mat3::Identity() + i01 * std::sin(g) * kJx + (std::cos(g) - 1.0) * kJx2);
}

DensityMatrix::DensityMatrix(Mat3 m) : mat(std::move(m)) {
  const double herm = (mat - mat.adjoint()).cwiseAbs().maxCoeff();
  if (!(herm <= 1e-12)) {
    std::ostringstream os;
    os << "density matrix not Hermitian: deviation " << herm;
    throw std::invalid_argument(os.str());
  }
  const std::complex<double> tr = mat.trace();
  if (!(std::abs(tr - std::complex<double>(1.0, 0.0)) <= 1e-12)) {
    std::ostringstream os;
    os << "density matrix trace " << tr.real() << " != 1";
    throw std::invalid_argument(os.str());
  }
  Eigen::SelfAdjointEigenSolver<Mat3> es(mat, Eigen::EigenvaluesOnly);
  const double lo = es.eigenvalues().minCoeff();
  if (lo < -1e-10) {
    std::ostringstream os;
    os << "density matrix has eigenvalue " << lo;
    throw std::invalid_argument(os.str());
  }
}

DensityMatrix pure_state(const Vec3& v) {
  const double n = v.norm();
  if (!(std::abs(n - 1.0) <= 1e-12)) {
    std::ostringstream os;
    os << "pure_state: vector norm " << n << " != 1";
    throw std::invalid_argument(os.str());
  }
  const Vec3 u = v / n;  // kill the residual so trace lands exactly on 1
  return DensityMatrix(u * u.adjoint());
}

}  // namespace ludersgap
