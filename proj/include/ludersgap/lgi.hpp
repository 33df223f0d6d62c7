#pragma once

#include "ludersgap/measure.hpp"

namespace ludersgap {

enum class RuleKind { Luders, VonNeumann };
enum class InitialState { Ket001, Ket100 };

struct LgiParams {
  double g1 = 0.0;
  double g2 = 0.0;
  double xi = 1.0;
  InitialState state = InitialState::Ket001;
  RuleKind rule = RuleKind::Luders;
};

struct KValue {
  double k13 = 0.0;
  double k23 = 0.0;
  double k12 = 0.0;
};

// diag(-1, 1, 1) in the computational basis.
Mat3 m1_observable();

// Degeneracy-breaking eigenbasis of m1: |1> with -1, then
// xi|2> + sqrt(1-xi^2)|3> and sqrt(1-xi^2)|2> - xi|3> with +1.
EigenBasis m1_basis(double xi);

// C_rs for (r,s) in {(1,2),(2,3),(1,3)}: state evolves to t_r, is measured
// under p.rule in the xi-basis, evolves to t_s, second readout via coarse blocks.
double lgi_correlator(const LgiParams& p, int r, int s);

KValue k_values(const LgiParams& p);

// von Neumann K13 at xi = 1 and equal couplings g1 = g2 = g:
// (1/16) [1 + 32 cos g - 20 cos 2g + 3 cos 4g].
double k13_closed_equal_g(double g);

}  // namespace ludersgap
