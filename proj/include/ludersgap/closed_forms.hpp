#pragma once

#include "ludersgap/lgi.hpp"
#include "ludersgap/nci.hpp"

namespace ludersgap {

// Every long-hand expression ships in two transcriptions: AsPublished is the
// literal reference text, Corrected carries the minimal sign/exponent fixes
// that make it agree with the simulation (see the audit command).
enum class Transcription { AsPublished, Corrected };

enum class KvForm { K13, K23, K12, K12Ket100 };

// von Neumann K13 at xi = 1, independent couplings.
double k13_closed_xi1(double g1, double g2, Transcription t);

// General-xi von Neumann closed forms (K12Ket100 uses the (1,0,0) start state
// and has no known transcription defect; t is ignored there).
double k_closed_form(KvForm which, double g1, double g2, double xi, Transcription t);

// Luders-rule beta triple; basis-parameter independent.
BetaValue beta_luders_closed(double theta, double phi);

// von Neumann beta triple at p's angles and basis parameters.
BetaValue beta_vn_closed(const NciParams& p, Transcription t);

}  // namespace ludersgap
