#include "locc/bounds.hpp"

#include <cmath>
#include <numeric>

namespace locc {

namespace {

// Tolerance used only to decide which party reports as the argmax.
constexpr double kTieTol = 1e-12;

std::vector<Bits> average_reduction_entropies(const Ensemble& e, std::span<const int> parties) {
  const ComplexMatrix rho = average_state(e);
  std::vector<Bits> out;
  for (int p : parties) out.push_back(von_neumann_entropy(partial_trace(rho, e.layout(), {&p, 1})));
  return out;
}

std::vector<Bits> member_reduction_entropies(const Ensemble& e, std::span<const int> parties) {
  std::vector<Bits> out;
  for (int p : parties) {
    double acc = 0.0;
    for (const auto& m : e.members()) acc += m.probability * von_neumann_entropy(m.state.reduce(p));
    out.push_back(acc);
  }
  return out;
}

std::vector<int> all_parties(const SystemLayout& layout) {
  std::vector<int> parties(static_cast<std::size_t>(layout.parties()));
  std::iota(parties.begin(), parties.end(), 1);
  return parties;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::ProvablyIndistinguishable:
      return "ProvablyIndistinguishable";
    case Verdict::Inconclusive:
      return "Inconclusive";
  }
  return "Unknown";
}

BoundReport locc_bound(const Ensemble& e) {
  const std::vector<int> parties = all_parties(e.layout());
  BoundReport report;
  report.party_entropies = average_reduction_entropies(e, parties);
  report.avg_member_entropy_per_party = member_reduction_entropies(e, parties);

  const auto& avg = report.avg_member_entropy_per_party;
  const double max_avg = *std::max_element(avg.begin(), avg.end());
  for (std::size_t z = 0; z < avg.size(); ++z) {
    if (avg[z] >= max_avg - kTieTol) {
      report.argmax_party = static_cast<int>(z) + 1;
      break;
    }
  }
  const double sum = std::accumulate(report.party_entropies.begin(), report.party_entropies.end(), 0.0);
  report.bound_bits = sum - max_avg;
  report.chi_bits = holevo_chi(e);
  report.verdict = report.bound_bits < report.chi_bits - kVerdictMargin
                       ? Verdict::ProvablyIndistinguishable
                       : Verdict::Inconclusive;
  return report;
}

Bits bipartite_bound(const Ensemble& e) {
  if (e.layout().parties() != 2)
    throw ArityError("bipartite bound needs exactly 2 parties, got " +
                     std::to_string(e.layout().parties()));
  return locc_bound(e).bound_bits;
}

Bits pure_squashed_entanglement(const QuantumState& s) {
  if (!s.is_pure()) throw PurityError("squashed-entanglement formula applies to pure states only");
  double sum = 0.0;
  for (int p = 1; p <= s.layout().parties(); ++p) sum += von_neumann_entropy(s.reduce(p));
  return sum;
}

ComplementarityReport complementarity_check(const Ensemble& e) {
  if (!e.all_pure()) throw PurityError("complementarity relation needs pure members");
  const double n = static_cast<double>(e.layout().parties());
  ComplementarityReport out;
  out.lhs = locc_bound(e).bound_bits;
  for (const auto& m : e.members()) out.lhs += m.probability * pure_squashed_entanglement(m.state) / n;
  out.capacity_D = std::log2(static_cast<double>(e.layout().total_dim()));
  out.holds = out.lhs <= out.capacity_D + 1e-9;
  return out;
}

Bits dense_coding_bound(const Ensemble& post_encoding, std::span<const int> sender_dims,
                        std::span<const int> receiver_parties) {
  if (receiver_parties.empty()) throw ArityError("dense-coding bound needs at least one receiver");
  const std::vector<int> receivers = post_encoding.layout().normalize(receiver_parties);
  double bound = 0.0;
  for (int d : sender_dims) {
    if (d < 1) throw LayoutError("sender dimension must be positive");
    bound += std::log2(static_cast<double>(d));
  }
  for (Bits s : average_reduction_entropies(post_encoding, receivers)) bound += s;
  const std::vector<Bits> avg = member_reduction_entropies(post_encoding, receivers);
  return bound - *std::max_element(avg.begin(), avg.end());
}

std::vector<int> leading_parties_of_dim(const SystemLayout& layout, Index dim) {
  std::vector<int> parties;
  Index acc = 1;
  for (int p = 1; p <= layout.parties() && acc < dim; ++p) {
    acc *= layout.dim(p);
    parties.push_back(p);
  }
  if (acc != dim || parties.empty())
    throw ShapeError("no leading party group has dimension " + std::to_string(dim));
  return parties;
}

Ensemble build_encoding_ensemble(const QuantumState& base, std::span<const Encoding> encodings,
                                 std::span<const int> sender_parties) {
  if (encodings.empty()) throw ValidationError("at least one encoding is required");
  const SystemLayout& layout = base.layout();
  const std::vector<int> senders =
      sender_parties.empty() ? leading_parties_of_dim(layout, encodings.front().unitary.rows())
                             : layout.normalize(sender_parties);

  std::vector<EnsembleMember> members;
  members.reserve(encodings.size());
  for (std::size_t x = 0; x < encodings.size(); ++x) {
    const ComplexMatrix& u = encodings[x].unitary;
    if (u.rows() != u.cols())
      throw UnitarityError("encoding " + std::to_string(x) + " is not square");
    const double err = (u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
    if (err > 1e-9) throw UnitarityError("encoding " + std::to_string(x) + " is not unitary");
    const ComplexMatrix full = embed_operator(u, layout, senders);
    if (base.is_pure()) {
      members.push_back({encodings[x].probability, QuantumState::pure(layout, full * base.amplitudes())});
    } else {
      const ComplexMatrix rho = full * base.density() * full.adjoint();
      members.push_back({encodings[x].probability, QuantumState::mixed(layout, rho)});
    }
  }
  return Ensemble(layout, std::move(members));
}

}  // namespace locc
