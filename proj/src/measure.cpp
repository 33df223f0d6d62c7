#include "ludersgap/measure.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ludersgap {

namespace {

constexpr double kGroupTol = 1e-9;  // eigenvalue grouping

void check_diagonalizes(const EigenBasis& basis, const Mat3& obs) {
  // Each basis vector must be an eigenvector of the observable with the
  // eigenvalue the basis labels it with; a mislabeled basis would regroup
  // outcomes silently.
  for (size_t k = 0; k < basis.vecs.size(); ++k) {
    const Vec3& v = basis.vecs[k];
    const double res = (obs * v - basis.vals[k] * v).cwiseAbs().maxCoeff();
    if (!(res <= 1e-10)) {
      std::ostringstream os;
      os << "update-rule basis does not diagonalize the observable: residual " << res;
      throw std::invalid_argument(os.str());
    }
  }
}

}  // namespace

EigenBasis::EigenBasis(std::vector<Vec3> v, std::vector<double> e)
    : vecs(std::move(v)), vals(std::move(e)) {
  if (vecs.size() != 3 || vals.size() != 3)
    throw std::invalid_argument("eigenbasis needs exactly 3 labeled vectors");
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j <= i; ++j) {
      const std::complex<double> d = vecs[i].adjoint() * vecs[j];
      const double want = (i == j) ? 1.0 : 0.0;
      if (!(std::abs(d - std::complex<double>(want, 0.0)) <= 1e-10))
        throw std::invalid_argument("eigenbasis vectors are not orthonormal");
    }
}

Mat3 observable_from_basis(const EigenBasis& b) {
  Mat3 obs = Mat3::Zero();
  for (size_t i = 0; i < b.vecs.size(); ++i)
    obs += b.vals[i] * (b.vecs[i] * b.vecs[i].adjoint());
  return obs;
}

ProjectorSet projectors_from_basis(const EigenBasis& b) {
  std::map<double, Mat3> grouped;
  for (size_t i = 0; i < b.vecs.size(); ++i) {
    double key = b.vals[i];
    for (auto& [k, blk] : grouped)
      if (std::abs(k - key) <= kGroupTol) {
        key = k;
        break;
      }
    auto it = grouped.find(key);
    if (it == grouped.end()) it = grouped.emplace(key, Mat3::Zero().eval()).first;
    it->second += b.vecs[i] * b.vecs[i].adjoint();
  }
  ProjectorSet ps;
  for (auto& [k, blk] : grouped) ps.blocks.emplace_back(k, blk);
  return ps;
}

namespace detail {

Mat3 branch_numerator(const Mat3& rho, const EigenBasis& b, const UpdateRule& rule,
                      double outcome) {
  if (!rule.vn) {
    Mat3 p = Mat3::Zero();
    for (size_t i = 0; i < b.vecs.size(); ++i)
      if (std::abs(b.vals[i] - outcome) <= kGroupTol) p += b.vecs[i] * b.vecs[i].adjoint();
    return p * rho * p;
  }
  const EigenBasis& fine = rule.basis ? *rule.basis : b;
  Mat3 out = Mat3::Zero();
  for (size_t i = 0; i < fine.vecs.size(); ++i)
    if (std::abs(fine.vals[i] - outcome) <= kGroupTol) {
      const Mat3 q = fine.vecs[i] * fine.vecs[i].adjoint();
      out += q * rho * q;
    }
  return out;
}

double seq_corr(const Mat3& rho, const EigenBasis& first, const UpdateRule& rule,
                const Mat3& u_mid, const ProjectorSet& second) {
  std::vector<double> outcomes;
  for (double v : first.vals) {
    bool seen = false;
    for (double o : outcomes) seen = seen || std::abs(o - v) <= kGroupTol;
    if (!seen) outcomes.push_back(v);
  }
  std::sort(outcomes.begin(), outcomes.end());
  double c = 0.0;
  for (double m : outcomes) {
    const Mat3 evolved = u_mid * branch_numerator(rho, first, rule, m) * u_mid.adjoint();
    for (const auto& [n, pn] : second.blocks) c += m * n * (evolved * pn).trace().real();
  }
  return c;
}

}  // namespace detail

std::pair<double, DensityMatrix> measure_update(const DensityMatrix& rho, const EigenBasis& b,
                                                const UpdateRule& rule, double outcome) {
  const ProjectorSet ps = projectors_from_basis(b);
  const Mat3* block = nullptr;
  for (const auto& [k, blk] : ps.blocks)
    if (std::abs(k - outcome) <= kGroupTol) block = &blk;
  if (!block) throw std::invalid_argument("outcome is not an eigenvalue of the observable");
  if (rule.vn && rule.basis) check_diagonalizes(*rule.basis, observable_from_basis(b));
  const double p = ((*block) * rho.mat).trace().real();
  if (p <= 1e-14) {
    std::ostringstream os;
    os << "outcome probability " << p << ": conditional state undefined";
    throw std::runtime_error(os.str());
  }
  const Mat3 num = detail::branch_numerator(rho.mat, b, rule, outcome);
  return {p, DensityMatrix(num / p)};
}

double sequential_correlation(const DensityMatrix& rho, const EigenBasis& first,
                              const UpdateRule& rule, const Unitary& u_mid,
                              const ProjectorSet& second) {
  if (rule.vn && rule.basis) check_diagonalizes(*rule.basis, observable_from_basis(first));
  return detail::seq_corr(rho.mat, first, rule, u_mid.mat, second);
}

double luders_closed_form(const DensityMatrix& rho, const Mat3& A, const Mat3& B) {
  return 0.5 * (rho.mat * (A * B + B * A)).trace().real();
}

double vn_correction_term(const DensityMatrix& rho, const EigenBasis& b, const Mat3& B) {
  std::vector<const Vec3*> plus;
  for (size_t i = 0; i < b.vecs.size(); ++i)
    if (std::abs(b.vals[i] - 1.0) <= kGroupTol) plus.push_back(&b.vecs[i]);
  if (plus.size() != 2)
    throw std::invalid_argument("basis lacks a two-fold degenerate +1 eigenspace");
  const Mat3 q1 = (*plus[0]) * plus[0]->adjoint();
  const Mat3 q2 = (*plus[1]) * plus[1]->adjoint();
  return ((q1 * rho.mat * q2 + q2 * rho.mat * q1) * B).trace().real();
}

}  // namespace ludersgap
