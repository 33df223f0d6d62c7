#include "ludersgap/nci.hpp"

#include <cmath>
#include <stdexcept>

namespace ludersgap {

namespace {

Vec3 alpha(int i) {
  const double s = 1.0 / std::sqrt(2.0);
  switch (i) {
    case 1: return Vec3(-s, 0, s);
    case 2: return Vec3(s, 0, s);
    default: return Vec3(0, 1, 0);
  }
}

}  // namespace

std::array<Mat3, 3> nci_observables() {
  std::array<Mat3, 3> obs;
  for (int i = 1; i <= 3; ++i) {
    const Vec3 a = alpha(i);
    obs[i - 1] = Mat3::Identity() - 2.0 * (a * a.adjoint());
  }
  return obs;
}

EigenBasis nci_basis(int observable, double param) {
  if (observable < 1 || observable > 3)
    throw std::invalid_argument("observable index must be 1, 2 or 3");
  if (!(param >= 0.0 && param <= 1.0))
    throw std::invalid_argument("basis parameter must lie in [0, 1]");
  const double s = std::sqrt(std::max(0.0, 1.0 - param * param));
  Vec3 anchor, u, w;
  if (observable == 1) {
    anchor = alpha(1);
    u = alpha(2);
    w = alpha(3);
  } else if (observable == 2) {
    anchor = alpha(2);
    u = alpha(1);
    w = alpha(3);
  } else {
    anchor = alpha(3);
    u = Vec3(0, 0, 1);
    w = Vec3(1, 0, 0);
  }
  return EigenBasis({anchor, param * u + s * w, s * u - param * w}, {-1.0, 1.0, 1.0});
}

DensityMatrix psi(double theta, double phi) {
  const Vec3 v(std::sin(theta) * std::sin(phi), std::cos(theta) * std::sin(phi), std::cos(phi));
  return DensityMatrix(v * v.adjoint());
}

namespace {

double correlator_impl(const Mat3& rho, int i, int j, double param_i, RuleKind kind) {
  const EigenBasis basis = nci_basis(i, param_i);
  const UpdateRule rule =
      kind == RuleKind::VonNeumann ? UpdateRule::von_neumann(basis) : UpdateRule::luders();
  return detail::seq_corr(rho, basis, rule, Mat3::Identity(),
                          projectors_from_basis(nci_basis(j, 1.0)));
}

Mat3 psi_mat(double theta, double phi) {
  const Vec3 v(std::sin(theta) * std::sin(phi), std::cos(theta) * std::sin(phi), std::cos(phi));
  return v * v.adjoint();
}

double param_for(const NciParams& p, int i) {
  return i == 1 ? p.eps : (i == 2 ? p.lam : p.del);
}

}  // namespace

double nci_correlator(const NciParams& p, int i, int j) {
  return correlator_impl(psi_mat(p.theta, p.phi), i, j, param_for(p, i), p.rule);
}

BetaValue beta_values(const NciParams& p) {
  const Mat3 rho = psi_mat(p.theta, p.phi);
  const double c12 = correlator_impl(rho, 1, 2, p.eps, p.rule);
  const double c23 = correlator_impl(rho, 2, 3, p.lam, p.rule);
  const double c31 = correlator_impl(rho, 3, 1, p.del, p.rule);
  return {c12 + c23 - c31, c12 - c23 + c31, -c12 + c23 + c31};
}

}  // namespace ludersgap
