#pragma once

// Holevo-like upper bounds on locally accessible information.
//
// For an ensemble {p_x, rho_x} on parties B_1..B_N the information any LOCC
// protocol can extract about x satisfies
//
//   I_LOCC <= sum_n S(rho^{B_n}) - max_Z sum_x p_x S(rho_x^Z),
//
// with rho^{B_n} the reductions of the average state and rho_x^Z the
// single-party reductions of each member.

#include <span>
#include <string>
#include <vector>

#include "locc/entropy.hpp"

namespace locc {

inline constexpr double kVerdictMargin = 1e-9;

enum class Verdict { ProvablyIndistinguishable, Inconclusive };

std::string to_string(Verdict v);

struct BoundReport {
  std::vector<Bits> party_entropies;               // S(rho^{B_n}), n = 1..N
  std::vector<Bits> avg_member_entropy_per_party;  // sum_x p_x S(rho_x^Z)
  int argmax_party = 1;                            // 1-based, lowest index on ties
  Bits bound_bits = 0.0;
  Bits chi_bits = 0.0;
  Verdict verdict = Verdict::Inconclusive;
};

BoundReport locc_bound(const Ensemble& e);

// Two-party special case; throws ArityError unless N = 2.
Bits bipartite_bound(const Ensemble& e);

// Sum of single-party reduction entropies of a pure state; PurityError for mixed input.
Bits pure_squashed_entanglement(const QuantumState& s);

// Pure-member complementarity relation with E_sq/N standing in for the
// distillable key (K_D <= E_sq/N, so this is the strongest checkable form).
struct ComplementarityReport {
  Bits lhs = 0.0;         // bound + sum_x p_x E_sq(psi_x) / N
  Bits capacity_D = 0.0;  // log2(d_1 ... d_N)
  bool holds = false;     // lhs <= D + 1e-9
};

ComplementarityReport complementarity_check(const Ensemble& e);

// Distributed dense-coding capacity bound, evaluated literally:
//   sum_i log2 d_{A_i} + sum_{j in R} S(rho^{B_j}) - max_{Z in R} sum_x p_x S(rho_x^Z)
// where R is the receiver party set of the post-encoding ensemble.
Bits dense_coding_bound(const Ensemble& post_encoding, std::span<const int> sender_dims,
                        std::span<const int> receiver_parties);

struct Encoding {
  double probability;
  ComplexMatrix unitary;  // acts on the sender parties
};

// Members (U_x (x) I) rho (U_x (x) I)^dagger. With no sender parties given,
// the senders are the leading parties whose dimensions multiply to the unitary size.
Ensemble build_encoding_ensemble(const QuantumState& base, std::span<const Encoding> encodings,
                                 std::span<const int> sender_parties = {});

// Leading parties 1..k with d_1 ... d_k == dim; ShapeError if none.
std::vector<int> leading_parties_of_dim(const SystemLayout& layout, Index dim);

}  // namespace locc
