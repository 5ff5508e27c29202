#include "locc/ensemble.hpp"

#include <cmath>
#include <string>

namespace locc {

QuantumState QuantumState::pure(SystemLayout layout, ComplexVector amplitudes) {
  if (amplitudes.size() != layout.total_dim())
    throw ShapeError("amplitude vector has " + std::to_string(amplitudes.size()) +
                     " entries, layout needs " + std::to_string(layout.total_dim()));
  if (!amplitudes.allFinite()) throw ValidationError("amplitudes must be finite");
  const double norm = amplitudes.norm();
  if (std::abs(norm - 1.0) > kPureNormWindow)
    throw NormalizationError("amplitude norm " + std::to_string(norm) + " is not 1 within 1e-6");
  amplitudes /= norm;
  return QuantumState(std::move(layout), std::move(amplitudes));
}

void validate_density(const ComplexMatrix& rho) {
  if (rho.rows() != rho.cols()) throw ShapeError("density matrix must be square");
  if (!rho.allFinite()) throw ValidationError("density matrix entries must be finite");
  if (hermiticity_error(rho) > kHermitianTol)
    throw SymmetryError("density matrix is not Hermitian within 1e-10");
  const double tr = rho.trace().real();
  if (std::abs(tr - 1.0) > kTraceTol)
    throw DistributionError("density matrix trace " + std::to_string(tr) + " is not 1");
  const double lowest = hermitian_eigenvalues(rho).minCoeff();
  if (lowest < -kPositivityTol)
    throw ValidationError("density matrix has negative eigenvalue " + std::to_string(lowest));
}

QuantumState QuantumState::mixed(SystemLayout layout, ComplexMatrix rho) {
  check_layout_square(rho, layout);
  validate_density(rho);
  return QuantumState(std::move(layout), std::move(rho));
}

const ComplexVector& QuantumState::amplitudes() const {
  if (const auto* v = std::get_if<ComplexVector>(&data_)) return *v;
  throw PurityError("state is mixed; no amplitude vector");
}

ComplexMatrix QuantumState::density() const {
  if (const auto* v = std::get_if<ComplexVector>(&data_)) return (*v) * v->adjoint();
  return std::get<ComplexMatrix>(data_);
}

ComplexMatrix QuantumState::reduce(std::span<const int> keep) const {
  if (const auto* v = std::get_if<ComplexVector>(&data_))
    return partial_trace_pure(*v, layout_, keep);
  return partial_trace(std::get<ComplexMatrix>(data_), layout_, keep);
}

QuantumState make_pure(const SystemLayout& layout, std::span<const Complex> amplitudes) {
  ComplexVector v(static_cast<Index>(amplitudes.size()));
  for (std::size_t i = 0; i < amplitudes.size(); ++i) v(static_cast<Index>(i)) = amplitudes[i];
  return QuantumState::pure(layout, std::move(v));
}

ComplexMatrix density_of(const QuantumState& state) { return state.density(); }

Ensemble::Ensemble(SystemLayout layout, std::vector<EnsembleMember> members)
    : layout_(std::move(layout)), members_(std::move(members)) {
  if (members_.empty()) throw ValidationError("ensemble must have at least one member");
  double total = 0.0;
  for (std::size_t x = 0; x < members_.size(); ++x) {
    const auto& m = members_[x];
    if (!(m.probability >= 0.0) || m.probability > 1.0 + kProbabilityTol)
      throw DistributionError("member " + std::to_string(x) + " probability " +
                              std::to_string(m.probability) + " outside [0,1]");
    if (!(m.state.layout() == layout_))
      throw ShapeError("member " + std::to_string(x) + " layout differs from ensemble layout");
    total += m.probability;
  }
  if (std::abs(total - 1.0) > kProbabilityTol)
    throw DistributionError("probabilities sum to " + std::to_string(total) + ", expected 1");
}

std::vector<double> Ensemble::probabilities() const {
  std::vector<double> p;
  p.reserve(members_.size());
  for (const auto& m : members_) p.push_back(m.probability);
  return p;
}

bool Ensemble::all_pure() const {
  for (const auto& m : members_)
    if (!m.state.is_pure()) return false;
  return true;
}

Ensemble uniform_ensemble(std::vector<QuantumState> states) {
  if (states.empty()) throw ValidationError("ensemble must have at least one member");
  SystemLayout layout = states.front().layout();
  const double p = 1.0 / static_cast<double>(states.size());
  std::vector<EnsembleMember> members;
  members.reserve(states.size());
  for (auto& s : states) members.push_back({p, std::move(s)});
  return Ensemble(std::move(layout), std::move(members));
}

ComplexMatrix average_state(const Ensemble& e) {
  const Index d = e.layout().total_dim();
  ComplexMatrix rho = ComplexMatrix::Zero(d, d);
  for (const auto& m : e.members()) {
    if (m.state.is_pure()) {
      const ComplexVector& v = m.state.amplitudes();
      rho.noalias() += m.probability * (v * v.adjoint());
    } else {
      rho += m.probability * m.state.density();
    }
  }
  return rho;
}

ComplexMatrix reduce_member(const Ensemble& e, std::size_t x, int party) {
  if (x >= e.size())
    throw IndexError("member index " + std::to_string(x) + " out of range (size " +
                     std::to_string(e.size()) + ")");
  if (party < 1 || party > e.layout().parties())
    throw IndexError("party index " + std::to_string(party) + " out of range");
  return e[x].state.reduce(party);
}

}  // namespace locc
