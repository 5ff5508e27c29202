#pragma once

// Adaptive LOCC protocol simulation. A protocol is a finite tree: each node
// is a local measurement on one party, described by one Kraus operator per
// outcome, and each outcome leads to a subtree or ends the protocol.

#include <memory>
#include <vector>

#include "locc/ensemble_io.hpp"
#include "locc/entropy.hpp"

namespace locc {

inline constexpr double kOutcomePruneTol = 1e-12;
inline constexpr int kDefaultMaxProtocolDepth = 8;

struct LocalMeasurement {
  int party = 1;                     // 1-based
  std::vector<ComplexMatrix> kraus;  // d_party x d_party, one per outcome

  // Range and completeness (sum K^dagger K = I within 1e-9) against a layout.
  void validate(const SystemLayout& layout) const;
};

class ProtocolTree {
 public:
  ProtocolTree() = default;  // leaf

  static ProtocolTree leaf() { return {}; }
  // children.size() must equal the number of outcomes.
  static ProtocolTree measure(LocalMeasurement m, std::vector<ProtocolTree> children);
  // Every outcome ends the protocol.
  static ProtocolTree measure(LocalMeasurement m);

  bool is_leaf() const { return node_ == nullptr; }
  const LocalMeasurement& measurement() const;
  const std::vector<ProtocolTree>& children() const;
  int depth() const;

 private:
  struct Node {
    LocalMeasurement measurement;
    std::vector<ProtocolTree> children;
  };
  std::shared_ptr<const Node> node_;
};

struct MeasurementBranch {
  int outcome = 0;
  double probability = 0.0;                // p_y
  Ensemble ensemble;                       // {p_{x|y}, rho_{x|y}}
  std::vector<std::size_t> source_member;  // post-member -> index x in the input ensemble
};

// Outcomes with p_y < 1e-12 are dropped; members with zero weight in an
// outcome are left out of that branch.
std::vector<MeasurementBranch> apply_local_measurement(const Ensemble& e, const LocalMeasurement& m);

struct Lemma1Report {
  Bits info_gained = 0.0;
  Bits chi_before = 0.0;
  Bits avg_chi_after = 0.0;
  Bits slack = 0.0;  // chi_before - avg_chi_after - info_gained
};

Lemma1Report lemma1_check(const Ensemble& e, const LocalMeasurement& m);

struct TranscriptRow {
  std::size_t member = 0;
  std::vector<int> transcript;  // outcome per step, root first
  double probability = 0.0;     // joint p(x, transcript)
};

using TranscriptDistribution = std::vector<TranscriptRow>;

struct ProtocolResult {
  TranscriptDistribution transcripts;
  Bits extracted_info = 0.0;   // I(X; transcript)
  Bits chain_rule_info = 0.0;  // sum over nodes of p(node) I(X; outcome | node)
};

// ProtocolError when the tree is deeper than max_depth.
ProtocolResult run_protocol(const Ensemble& e, const ProtocolTree& tree,
                            int max_depth = kDefaultMaxProtocolDepth);

// { "party": k, "kraus": [matrix, ...], "children": [subtree | null, ...] }, or null for a leaf.
ProtocolTree protocol_from_json(const Json& j);
Json protocol_to_json(const ProtocolTree& tree);
ProtocolTree load_protocol(const std::filesystem::path& path);

}  // namespace locc
