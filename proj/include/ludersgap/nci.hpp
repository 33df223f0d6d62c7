#pragma once

#include <array>

#include "ludersgap/lgi.hpp"
#include "ludersgap/measure.hpp"

namespace ludersgap {

struct NciParams {
  double theta = 0.0;
  double phi = 0.0;
  double eps = 1.0;
  double lam = 1.0;
  double del = 1.0;
  RuleKind rule = RuleKind::Luders;
};

struct BetaValue {
  double b31 = 0.0;
  double b23 = 0.0;
  double b12 = 0.0;
};

// A_i = I - 2|alpha_i><alpha_i| with alpha_1 = (-1,0,1)/sqrt2,
// alpha_2 = (1,0,1)/sqrt2, alpha_3 = (0,1,0); mutually commuting, eigenvalues (-1,1,1).
std::array<Mat3, 3> nci_observables();

// Degeneracy-breaking eigenbasis of A_observable, parametrized by eps/lam/del.
EigenBasis nci_basis(int observable, double param);

// Pure state (sin t sin p, cos t sin p, cos p).
DensityMatrix psi(double theta, double phi);

// <A_i A_j> on a fresh psi(theta, phi): A_i measured first under p.rule with
// its own basis parameter, A_j read via coarse blocks, no evolution between.
double nci_correlator(const NciParams& p, int i, int j);

// b31 = c12 + c23 - c31, b23 = c12 - c23 + c31, b12 = -c12 + c23 + c31.
BetaValue beta_values(const NciParams& p);

}  // namespace ludersgap
