#pragma once

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "locc/tensor.hpp"

namespace locc {

inline constexpr double kPureNormWindow = 1e-6;
inline constexpr double kTraceTol = 1e-9;
inline constexpr double kPositivityTol = 1e-9;
inline constexpr double kProbabilityTol = 1e-9;

// A validated state on a multipartite layout. Pure states keep their
// amplitude vector until a density matrix is requested.
class QuantumState {
 public:
  // Normalizes amplitudes whose 2-norm lies within 1 +/- 1e-6.
  static QuantumState pure(SystemLayout layout, ComplexVector amplitudes);
  // Requires Hermitian (1e-10), unit trace (1e-9), eigenvalues >= -1e-9.
  static QuantumState mixed(SystemLayout layout, ComplexMatrix rho);

  bool is_pure() const { return std::holds_alternative<ComplexVector>(data_); }
  const SystemLayout& layout() const { return layout_; }

  // Throws PurityError for mixed states.
  const ComplexVector& amplitudes() const;
  ComplexMatrix density() const;

  // Reduced density matrix on the given 1-based parties.
  ComplexMatrix reduce(std::span<const int> keep) const;
  ComplexMatrix reduce(int party) const { return reduce(std::span<const int>(&party, 1)); }

 private:
  QuantumState(SystemLayout layout, std::variant<ComplexVector, ComplexMatrix> data)
      : layout_(std::move(layout)), data_(std::move(data)) {}

  SystemLayout layout_;
  std::variant<ComplexVector, ComplexMatrix> data_;
};

QuantumState make_pure(const SystemLayout& layout, std::span<const Complex> amplitudes);
ComplexMatrix density_of(const QuantumState& state);

// Throws unless rho is a density matrix within the state tolerances.
void validate_density(const ComplexMatrix& rho);

struct EnsembleMember {
  double probability;
  QuantumState state;
};

// {p_x, rho_x}: nonempty, one shared layout, p_x >= 0 summing to 1 within 1e-9.
class Ensemble {
 public:
  Ensemble(SystemLayout layout, std::vector<EnsembleMember> members);

  const SystemLayout& layout() const { return layout_; }
  const std::vector<EnsembleMember>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  const EnsembleMember& operator[](std::size_t x) const { return members_[x]; }

  std::vector<double> probabilities() const;
  bool all_pure() const;

 private:
  SystemLayout layout_;
  std::vector<EnsembleMember> members_;
};

// Equal-weight ensemble over the given states.
Ensemble uniform_ensemble(std::vector<QuantumState> states);

// sum_x p_x rho_x
ComplexMatrix average_state(const Ensemble& e);

// Reduction of member x (0-based) onto a single 1-based party.
ComplexMatrix reduce_member(const Ensemble& e, std::size_t x, int party);

}  // namespace locc
