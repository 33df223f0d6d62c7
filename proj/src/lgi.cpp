#include "ludersgap/lgi.hpp"

#include <cmath>
#include <stdexcept>

namespace ludersgap {

Mat3 m1_observable() {
  Mat3 m = Mat3::Identity();
  m(0, 0) = -1.0;
  return m;
}

EigenBasis m1_basis(double xi) {
  if (!(xi >= 0.0 && xi <= 1.0)) throw std::invalid_argument("xi must lie in [0, 1]");
  const double s = std::sqrt(std::max(0.0, 1.0 - xi * xi));
  const Vec3 e1(1, 0, 0), e2(0, 1, 0), e3(0, 0, 1);
  return EigenBasis({e1, xi * e2 + s * e3, s * e2 - xi * e3}, {-1.0, 1.0, 1.0});
}

double lgi_correlator(const LgiParams& p, int r, int s) {
  const bool valid = (r == 1 && s == 2) || (r == 2 && s == 3) || (r == 1 && s == 3);
  if (!valid) throw std::invalid_argument("correlator pair must be (1,2), (2,3) or (1,3)");
  const Vec3 v0 = p.state == InitialState::Ket001 ? Vec3(0, 0, 1) : Vec3(1, 0, 0);
  const double pre = r == 1 ? 0.0 : p.g1;
  const double mid = (r == 1 && s == 2) ? p.g1 : (r == 2 ? p.g2 : p.g1 + p.g2);
  const Mat3 upre = propagator(pre).mat;
  const Mat3 rho_r = upre * (v0 * v0.adjoint()) * upre.adjoint();
  const EigenBasis basis = m1_basis(p.xi);
  const UpdateRule rule = p.rule == RuleKind::VonNeumann ? UpdateRule::von_neumann(basis)
                                                         : UpdateRule::luders();
  return detail::seq_corr(rho_r, basis, rule, propagator(mid).mat,
                          projectors_from_basis(basis));
}

KValue k_values(const LgiParams& p) {
  const double c12 = lgi_correlator(p, 1, 2);
  const double c23 = lgi_correlator(p, 2, 3);
  const double c13 = lgi_correlator(p, 1, 3);
  return {c12 + c23 - c13, c12 - c23 + c13, -c12 + c23 + c13};
}

double k13_closed_equal_g(double g) {
  return (1.0 + 32.0 * std::cos(g) - 20.0 * std::cos(2.0 * g) + 3.0 * std::cos(4.0 * g)) / 16.0;
}

}  // namespace ludersgap
