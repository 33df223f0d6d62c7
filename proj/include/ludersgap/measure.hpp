#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ludersgap/matcore.hpp"

namespace ludersgap {

// Ordered orthonormal rank-1 eigenvectors with eigenvalue labels; the order
// and the vectors themselves carry the degeneracy-breaking choice.
struct EigenBasis {
  std::vector<Vec3> vecs;
  std::vector<double> vals;
  EigenBasis(std::vector<Vec3> v, std::vector<double> e);  // orthonormality check (1e-10)
};

Mat3 observable_from_basis(const EigenBasis& b);

// Eigenvalue-keyed coarse projectors (degeneracy-respecting view).
struct ProjectorSet {
  std::vector<std::pair<double, Mat3>> blocks;  // ascending eigenvalue
};

ProjectorSet projectors_from_basis(const EigenBasis& b);

struct UpdateRule {
  bool vn = false;
  std::optional<EigenBasis> basis;  // degeneracy-breaking basis, von Neumann only

  static UpdateRule luders() { return {}; }
  static UpdateRule von_neumann(EigenBasis b) { return {true, std::move(b)}; }
};

// (probability, post state) for one outcome; throws on outcomes of
// probability <= 1e-14 (conditional state undefined).
std::pair<double, DensityMatrix> measure_update(const DensityMatrix& rho,
                                                const EigenBasis& b,
                                                const UpdateRule& rule,
                                                double outcome);

// Two-point correlator: first measurement (basis + rule), unitary evolution,
// second measurement read through coarse blocks; unnormalized branches.
double sequential_correlation(const DensityMatrix& rho, const EigenBasis& first,
                              const UpdateRule& rule, const Unitary& u_mid,
                              const ProjectorSet& second);

// (1/2) Re Tr[rho (AB + BA)] for Hermitian A, B.
double luders_closed_form(const DensityMatrix& rho, const Mat3& A, const Mat3& B);

// Tr[(Q1 rho Q2 + Q2 rho Q1) B] over the two-fold degenerate +1 eigenspace of b;
// equals the Luders-minus-von-Neumann correlator difference when B is the
// evolved second observable.
double vn_correction_term(const DensityMatrix& rho, const EigenBasis& b, const Mat3& B);

namespace detail {
// Unnormalized post-measurement branch and raw-matrix correlator used by the
// scenario hot paths (no density-matrix revalidation per call).
Mat3 branch_numerator(const Mat3& rho, const EigenBasis& b, const UpdateRule& rule,
                      double outcome);
double seq_corr(const Mat3& rho, const EigenBasis& first, const UpdateRule& rule,
                const Mat3& u_mid, const ProjectorSet& second);
}  // namespace detail

}  // namespace ludersgap
