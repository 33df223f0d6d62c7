#include "ludersgap/closed_forms.hpp"

#include <cmath>

namespace ludersgap {

namespace {

inline double sq(double x) { return x * x; }
inline double root1m(double p) { return std::sqrt(std::max(0.0, 1.0 - p * p)); }

// Published text carries a doubled factor 2 cos^2(g1) cos(g2); the corrected
// transcription drops the 2.
double k13_xi1(double g1, double g2, Transcription t) {
  const double two = t == Transcription::AsPublished ? 2.0 : 1.0;
  return 0.5 * (sq(std::sin(g1)) + std::cos(g2) + two * sq(std::cos(g1)) * std::cos(g2)
                + sq(std::cos(g2)) * sq(std::sin(g1))
                + std::cos(g1) * (2.0 + sq(std::sin(g2)))
                - 2.0 * std::cos(g1 + g2) - sq(std::sin(g1 + g2)));
}

// Published text repeats sin^2(g1/2) where the second factor must read
// sin^2(g2/2), and prints 15 xi^2 where the series continues with 15 xi^4.
double k13_vn(double g1, double g2, double xi, Transcription t) {
  const double x2 = xi * xi, x4 = x2 * x2;
  double f, c;
  if (t == Transcription::AsPublished) {
    f = sq(std::sin(g1 / 2)) * sq(std::sin(g1 / 2));
    c = 2.0 - 15.0 * x2 + 15.0 * x2;
  } else {
    f = sq(std::sin(g1 / 2)) * sq(std::sin(g2 / 2));
    c = 2.0 - 15.0 * x2 + 15.0 * x4;
  }
  return 1.0
         + (-2.0 - 11.0 * x2 + 11.0 * x4 + 9.0 * x2 * (-1.0 + x2) * std::cos(g2)
            + std::cos(g1) * (4.0 - 21.0 * x2 + 21.0 * x4 + c * std::cos(g2))) * f
         + (1.0 - 2.0 * x2 + 2.0 * x4) * std::sin(g1) * std::sin(g2)
         - 0.25 * (1.0 - 6.0 * x2 + 6.0 * x4) * std::sin(2 * g1) * std::sin(2 * g2);
}

// Published text prints 1 - 2 xi^2 + 2 xi^2; the series continues with 2 xi^4.
double k23_vn(double g1, double g2, double xi, Transcription t) {
  const double x2 = xi * xi, x4 = x2 * x2;
  const double c = t == Transcription::AsPublished ? 1.0 - 2.0 * x2 + 2.0 * x2
                                                   : 1.0 - 2.0 * x2 + 2.0 * x4;
  return 0.25 * (4.0
                 + (-4.0 - 3.0 * x2 + 3.0 * x4 - 4.0 * std::cos(g2)
                    + x2 * (-1.0 + x2) * (4.0 * std::cos(g2) + 9.0 * std::cos(2 * g2))
                    + std::cos(g1) * (2.0 - 21.0 * x2 + 21.0 * x4
                                      + 4.0 * (1.0 - 3.0 * x2 + 3.0 * x4) * std::cos(g2)
                                      + (2.0 - 15.0 * x2 + 15.0 * x4) * std::cos(2 * g2)))
                       * sq(std::sin(g1 / 2))
                 - 4.0 * c * std::sin(g1) * std::sin(g2)
                 + (1.0 - 6.0 * x2 + 6.0 * x4) * std::sin(2 * g1) * std::sin(2 * g2));
}

// Published text attaches sin^2(g2/2) to the -8(...)cos(g1) group; the
// corrected transcription squares it to sin^4(g2/2).
double k12_vn(double g1, double g2, double xi, Transcription t) {
  const double x2 = xi * xi, x4 = x2 * x2;
  const double h2 = sq(std::sin(g2 / 2));
  const double cos_term = t == Transcription::AsPublished ? h2 : h2 * h2;
  return 0.25 * (4.0
                 + (-8.0 - x2 + x4 + (-2.0 - 3.0 * x2 + 3.0 * x4) * std::cos(g2)
                    + std::cos(2 * g1) * (4.0 - 27.0 * x2 + 27.0 * x4
                                          + (6.0 - 33.0 * x2 + 33.0 * x4) * std::cos(g2))) * h2
                 - 8.0 * (1.0 - 3.0 * x2 + 3.0 * x4) * std::cos(g1) * cos_term
                 - 4.0 * std::sin(g1) * std::sin(g2)
                 + 8.0 * x2 * (-1.0 + x2) * (-1.0 + 3.0 * std::cos(g1) * std::cos(g2))
                       * std::sin(g1) * std::sin(g2)
                 + std::sin(2 * g1) * std::sin(2 * g2));
}

// (1,0,0) start state; agrees with the simulation as printed.
double k12_vn_ket100(double g1, double g2, double xi) {
  const double x2 = xi * xi, x4 = x2 * x2;
  return (1.0 / 16.0)
         * (x2 - x4 + 2.0
            - 16.0 * std::cos(g1) * sq(std::sin(g2 / 2))
                  * ((3.0 * x4 - 3.0 * x2 + 1.0) * std::cos(g2) + x4 - x2 + 3.0)
            + 2.0 * std::cos(2 * g2)
            + 4.0 * std::cos(2 * g1) * sq(std::sin(g2 / 2))
                  * ((9.0 * x4 - 9.0 * x2 - 2.0) * std::cos(g2) + 3.0 * x4 - 3.0 * x2 - 4.0)
            - 16.0 * std::sin(g1) * std::sin(g2)
            - 4.0 * std::sin(2 * g1) * std::sin(2 * g2)
            - 3.0 * (x2 - 1.0) * x2 * std::cos(2 * g2)
            + 4.0 * (x4 - x2 + 3.0) * std::cos(g2));
}

// Published text writes lambda(-1 + 2 lambda^2) in the cos(theta) group; the
// corrected transcription flips it to lambda(1 - 2 lambda^2).
double b31_vn(double th, double ph, double e, double l, double d, Transcription t) {
  const double e2 = e * e, e4 = e2 * e2, l2 = l * l, l4 = l2 * l2, d2 = d * d;
  const double re = root1m(e), rl = root1m(l), rd = root1m(d);
  const double s2 = std::sqrt(2.0);
  const double lam_cos = t == Transcription::AsPublished ? l * (-1.0 + 2.0 * l2)
                                                         : l * (1.0 - 2.0 * l2);
  return (-1.0 + 2.0 * e2 - 2.0 * e4 + (-1.0 + l2) * 2.0 * l2 + 2.0 * d * (1.0 - 2.0 * d2) * rd)
             * sq(std::cos(ph))
         + ((e - l) * (e + l) * (-1.0 + e2 + l2)
            + (1.0 - 3.0 * e2 + 3.0 * e4 + 3.0 * l2 - 3.0 * l4) * std::cos(2 * th)
            + 2.0 * d * (-1.0 + 2.0 * d2) * rd * sq(std::sin(th))
            + s2 * (e * (1.0 - 2.0 * e2) * re + l * (1.0 - 2.0 * l2) * rl) * std::sin(2 * th))
               * sq(std::sin(ph))
         - (s2 * (e * (-1.0 + 2.0 * e2) * re + lam_cos * rl) * std::cos(th)
            + std::sin(th)
            + 2.0 * (-e2 + e4 - l2 + l4 + 2.0 * d2 - 2.0 * d2 * d2) * std::sin(th))
               * std::sin(2 * ph);
}

// Published text's cos^2(phi) bracket carries +2 eps^4; the corrected
// transcription flips it to -2 eps^4.
double b23_vn(double th, double ph, double e, double l, double d, Transcription t) {
  const double e2 = e * e, e4 = e2 * e2, l2 = l * l, l4 = l2 * l2, d2 = d * d;
  const double re = root1m(e), rl = root1m(l), rd = root1m(d);
  const double s2 = std::sqrt(2.0);
  const double e4sign = t == Transcription::AsPublished ? 2.0 : -2.0;
  const double first =
      -1.0 + 2.0 * e2 + e4sign * e4 + 2.0 * l2 - 2.0 * l4 + 2.0 * d * (-1.0 + 2.0 * d2) * rd;
  return first * sq(std::cos(ph))
         + (-e2 + e4 - l2 + l4
            + (1.0 - 3.0 * e2 + 3.0 * e4 - 3.0 * l2 + 3.0 * l4) * std::cos(2 * th)
            + 2.0 * d * (1.0 - 2.0 * d2) * rd * sq(std::sin(th))
            + s2 * (e * (1.0 - 2.0 * e2) * re + l * (-1.0 + 2.0 * l2) * rl) * std::sin(2 * th))
               * sq(std::sin(ph))
         + (s2 * (e * (1.0 - 2.0 * e2) * re + l * (1.0 - 2.0 * l2) * rl) * std::cos(th)
            + std::sin(th)
            + 2.0 * (e2 - e4 - l2 + l4 + 2.0 * d2 - 2.0 * d2 * d2) * std::sin(th))
               * std::sin(2 * ph);
}

// Published text's cos^2(phi) bracket opens with -1 + 2 eps^2; the corrected
// transcription flips both signs to 1 - 2 eps^2.
double b12_vn(double th, double ph, double e, double l, double d, Transcription t) {
  const double e2 = e * e, e4 = e2 * e2, l2 = l * l, l4 = l2 * l2, d2 = d * d;
  const double re = root1m(e), rl = root1m(l), rd = root1m(d);
  const double s2 = std::sqrt(2.0);
  const double head = t == Transcription::AsPublished ? -1.0 + 2.0 * e2 : 1.0 - 2.0 * e2;
  const double first = head + 2.0 * e4 + (-1.0 + l2) * 2.0 * l2 + 2.0 * d * (-1.0 + 2.0 * d2) * rd;
  return first * sq(std::cos(ph))
         - (1.0 - e2 + e4 - l2 + l4
            + (2.0 - 3.0 * e2 + 3.0 * e4 - 3.0 * l2 + 3.0 * l4) * std::cos(2 * th)
            + 2.0 * d * (-1.0 + 2.0 * d2) * rd * sq(std::sin(th))
            + s2 * (e * (1.0 - 2.0 * e2) * re + l * (-1.0 + 2.0 * l2) * rl) * std::sin(2 * th))
               * sq(std::sin(ph))
         + (s2 * (e * (-1.0 + 2.0 * e2) * re + l * (-1.0 + 2.0 * l2) * rl) * std::cos(th)
            + (-1.0 - 2.0 * e2 + 2.0 * e4 + 2.0 * l2 - 2.0 * l4 + 4.0 * d2 - 4.0 * d2 * d2)
                  * std::sin(th))
               * std::sin(2 * ph);
}

}  // namespace

double k13_closed_xi1(double g1, double g2, Transcription t) { return k13_xi1(g1, g2, t); }

double k_closed_form(KvForm which, double g1, double g2, double xi, Transcription t) {
  switch (which) {
    case KvForm::K13: return k13_vn(g1, g2, xi, t);
    case KvForm::K23: return k23_vn(g1, g2, xi, t);
    case KvForm::K12: return k12_vn(g1, g2, xi, t);
    default: return k12_vn_ket100(g1, g2, xi);
  }
}

BetaValue beta_luders_closed(double theta, double phi) {
  const double cp = std::cos(phi), ss = std::sin(theta) * std::sin(phi);
  return {1.0 - 2.0 * sq(cp + ss), 1.0 - 2.0 * sq(cp - ss),
          1.0 - 4.0 * sq(std::cos(theta)) * sq(std::sin(phi))};
}

BetaValue beta_vn_closed(const NciParams& p, Transcription t) {
  return {b31_vn(p.theta, p.phi, p.eps, p.lam, p.del, t),
          b23_vn(p.theta, p.phi, p.eps, p.lam, p.del, t),
          b12_vn(p.theta, p.phi, p.eps, p.lam, p.del, t)};
}

}  // namespace ludersgap
