#pragma once

// Entropic quantities. All values are in bits (log base 2).

#include <span>
#include <vector>

#include "locc/ensemble.hpp"

namespace locc {

// Entropy values in bits.
using Bits = double;

inline constexpr double kSpectrumCutoff = 1e-12;
inline constexpr double kCompletenessTol = 1e-9;

// -sum p log2 p with 0 log 0 = 0. Entries >= -1e-12 (negatives clamped), sum 1 within 1e-9.
Bits shannon_entropy(std::span<const double> p);

// Shannon entropy of the spectrum; eigenvalues below 1e-12 count as zero.
Bits von_neumann_entropy(const ComplexMatrix& rho);
Bits von_neumann_entropy(const QuantumState& state);

// S(sum p_x rho_x) - sum p_x S(rho_x), clamped at 0 when within -1e-9.
Bits holevo_chi(const Ensemble& e);

// I(X;Y) of a joint distribution given as rows x, columns y.
Bits mutual_information(const Eigen::MatrixXd& joint);

// Throws PovmError unless sum K^dagger K = I_dim within 1e-9.
void check_completeness(std::span<const ComplexMatrix> kraus, Index dim);

// p(x, y) = p_x tr(K_y rho_x K_y^dagger) for Kraus operators on the full space.
Eigen::MatrixXd outcome_joint_distribution(const Ensemble& e, std::span<const ComplexMatrix> kraus);

// Mutual information between member identity and the outcome of the measurement.
Bits outcome_mutual_information(const Ensemble& e, std::span<const ComplexMatrix> kraus);

}  // namespace locc
