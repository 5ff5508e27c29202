#include "locc/entropy.hpp"

#include <cmath>
#include <string>

namespace locc {

Bits shannon_entropy(std::span<const double> p) {
  double total = 0.0;
  for (double v : p) {
    if (!(v >= -1e-12)) throw DistributionError("probability " + std::to_string(v) + " is negative");
    total += v;
  }
  if (std::abs(total - 1.0) > kProbabilityTol)
    throw DistributionError("distribution sums to " + std::to_string(total) + ", expected 1");
  double h = 0.0;
  for (double v : p)
    if (v > 0.0) h -= v * std::log2(v);
  return h;
}

Bits von_neumann_entropy(const ComplexMatrix& rho) {
  const Eigen::VectorXd spectrum = hermitian_eigenvalues(rho);
  std::vector<double> p(static_cast<std::size_t>(spectrum.size()));
  for (Index i = 0; i < spectrum.size(); ++i)
    p[static_cast<std::size_t>(i)] = spectrum(i) < kSpectrumCutoff ? 0.0 : spectrum(i);
  return shannon_entropy(p);
}

Bits von_neumann_entropy(const QuantumState& state) {
  if (state.is_pure()) return 0.0;
  return von_neumann_entropy(state.density());
}

Bits holevo_chi(const Ensemble& e) {
  double chi = von_neumann_entropy(average_state(e));
  for (const auto& m : e.members()) chi -= m.probability * von_neumann_entropy(m.state);
  if (chi < 0.0 && chi >= -1e-9) chi = 0.0;
  return chi;
}

Bits mutual_information(const Eigen::MatrixXd& joint) {
  const Eigen::VectorXd px = joint.rowwise().sum();
  const Eigen::RowVectorXd py = joint.colwise().sum();
  double info = 0.0;
  for (Index x = 0; x < joint.rows(); ++x)
    for (Index y = 0; y < joint.cols(); ++y) {
      const double pxy = joint(x, y);
      if (pxy > 0.0) info += pxy * std::log2(pxy / (px(x) * py(y)));
    }
  return std::max(info, 0.0);
}

void check_completeness(std::span<const ComplexMatrix> kraus, Index dim) {
  if (kraus.empty()) throw PovmError("measurement needs at least one Kraus operator");
  ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
  for (std::size_t y = 0; y < kraus.size(); ++y) {
    const ComplexMatrix& k = kraus[y];
    if (k.rows() != dim || k.cols() != dim)
      throw PovmError("Kraus operator " + std::to_string(y) + " is " + std::to_string(k.rows()) +
                      "x" + std::to_string(k.cols()) + ", expected " + std::to_string(dim) + "x" +
                      std::to_string(dim));
    sum.noalias() += k.adjoint() * k;
  }
  const double err = (sum - ComplexMatrix::Identity(dim, dim)).cwiseAbs().maxCoeff();
  if (err > kCompletenessTol)
    throw PovmError("Kraus operators are not complete: max |sum K^dag K - I| = " +
                    std::to_string(err));
}

Eigen::MatrixXd outcome_joint_distribution(const Ensemble& e, std::span<const ComplexMatrix> kraus) {
  check_completeness(kraus, e.layout().total_dim());
  Eigen::MatrixXd joint(static_cast<Index>(e.size()), static_cast<Index>(kraus.size()));
  for (std::size_t x = 0; x < e.size(); ++x) {
    const auto& m = e[x];
    for (std::size_t y = 0; y < kraus.size(); ++y) {
      double q;
      if (m.state.is_pure()) {
        q = (kraus[y] * m.state.amplitudes()).squaredNorm();
      } else {
        q = (kraus[y] * m.state.density() * kraus[y].adjoint()).trace().real();
      }
      joint(static_cast<Index>(x), static_cast<Index>(y)) = m.probability * std::max(q, 0.0);
    }
  }
  return joint;
}

Bits outcome_mutual_information(const Ensemble& e, std::span<const ComplexMatrix> kraus) {
  return mutual_information(outcome_joint_distribution(e, kraus));
}

}  // namespace locc
