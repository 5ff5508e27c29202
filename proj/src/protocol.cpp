#include "locc/protocol.hpp"

#include <cmath>
#include <map>

namespace locc {

namespace {

// Members whose own outcome probability falls below this are left out of a branch.
constexpr double kMemberDropTol = 1e-13;

struct WeightedMember {
  std::size_t source;  // index in the caller's ensemble
  double weight;       // joint weight (unnormalized)
  QuantumState state;
};

struct Outcome {
  int index;
  double mass;  // sum of kept member weights
  std::vector<WeightedMember> members;
};

std::vector<ComplexMatrix> embedded_kraus(const SystemLayout& layout, const LocalMeasurement& m) {
  std::vector<ComplexMatrix> out;
  out.reserve(m.kraus.size());
  for (const auto& k : m.kraus) out.push_back(embed_operator(k, layout, {&m.party, 1}));
  return out;
}

// Applies one measurement to weighted members. Also returns the full joint
// weight table (member row, outcome column) before any dropping.
std::vector<Outcome> measure(const SystemLayout& layout, const std::vector<WeightedMember>& members,
                             const LocalMeasurement& m, Eigen::MatrixXd* joint) {
  const std::vector<ComplexMatrix> kraus = embedded_kraus(layout, m);
  if (joint) *joint = Eigen::MatrixXd::Zero(static_cast<Index>(members.size()), static_cast<Index>(kraus.size()));

  std::vector<Outcome> outcomes;
  for (std::size_t y = 0; y < kraus.size(); ++y) {
    Outcome out{static_cast<int>(y), 0.0, {}};
    for (std::size_t i = 0; i < members.size(); ++i) {
      const WeightedMember& wm = members[i];
      const ComplexMatrix& k = kraus[y];
      if (wm.state.is_pure()) {
        ComplexVector post = k * wm.state.amplitudes();
        const double q = post.squaredNorm();
        if (joint) (*joint)(static_cast<Index>(i), static_cast<Index>(y)) = wm.weight * q;
        if (q < kMemberDropTol || wm.weight == 0.0) continue;
        post /= std::sqrt(q);
        out.members.push_back({wm.source, wm.weight * q, QuantumState::pure(layout, std::move(post))});
        out.mass += wm.weight * q;
      } else {
        ComplexMatrix post = k * wm.state.density() * k.adjoint();
        const double q = std::max(post.trace().real(), 0.0);
        if (joint) (*joint)(static_cast<Index>(i), static_cast<Index>(y)) = wm.weight * q;
        if (q < kMemberDropTol || wm.weight == 0.0) continue;
        post /= q;
        post = (0.5 * (post + post.adjoint())).eval();
        out.members.push_back({wm.source, wm.weight * q, QuantumState::mixed(layout, std::move(post))});
        out.mass += wm.weight * q;
      }
    }
    outcomes.push_back(std::move(out));
  }
  return outcomes;
}

Ensemble normalized_ensemble(const SystemLayout& layout, const Outcome& out) {
  std::vector<EnsembleMember> members;
  members.reserve(out.members.size());
  for (const auto& wm : out.members) members.push_back({wm.weight / out.mass, wm.state});
  return Ensemble(layout, std::move(members));
}

std::vector<WeightedMember> weighted_members(const Ensemble& e) {
  std::vector<WeightedMember> out;
  out.reserve(e.size());
  for (std::size_t x = 0; x < e.size(); ++x) out.push_back({x, e[x].probability, e[x].state});
  return out;
}

void validate_tree(const ProtocolTree& t, const SystemLayout& layout) {
  if (t.is_leaf()) return;
  t.measurement().validate(layout);
  for (const auto& child : t.children()) validate_tree(child, layout);
}

struct Walker {
  const SystemLayout& layout;
  ProtocolResult result;
  std::vector<int> transcript;

  void walk(const ProtocolTree& t, const std::vector<WeightedMember>& members) {
    if (t.is_leaf()) {
      for (const auto& wm : members)
        if (wm.weight > 0.0) result.transcripts.push_back({wm.source, transcript, wm.weight});
      return;
    }
    Eigen::MatrixXd joint;
    const std::vector<Outcome> outcomes = measure(layout, members, t.measurement(), &joint);
    const double node_mass = joint.sum();
    if (node_mass > 0.0) result.chain_rule_info += node_mass * mutual_information(joint / node_mass);
    for (const auto& out : outcomes) {
      if (out.mass < kOutcomePruneTol) continue;
      transcript.push_back(out.index);
      walk(t.children()[static_cast<std::size_t>(out.index)], out.members);
      transcript.pop_back();
    }
  }
};

}  // namespace

void LocalMeasurement::validate(const SystemLayout& layout) const {
  if (party < 1 || party > layout.parties())
    throw ProtocolError("measurement party " + std::to_string(party) + " out of range 1.." +
                        std::to_string(layout.parties()));
  check_completeness(kraus, layout.dim(party));
}

ProtocolTree ProtocolTree::measure(LocalMeasurement m, std::vector<ProtocolTree> children) {
  if (m.kraus.empty()) throw ProtocolError("measurement node needs at least one outcome");
  if (children.size() != m.kraus.size())
    throw ProtocolError("measurement has " + std::to_string(m.kraus.size()) + " outcomes but " +
                        std::to_string(children.size()) + " children");
  ProtocolTree t;
  t.node_ = std::make_shared<const Node>(Node{std::move(m), std::move(children)});
  return t;
}

ProtocolTree ProtocolTree::measure(LocalMeasurement m) {
  std::vector<ProtocolTree> children(m.kraus.size());
  return measure(std::move(m), std::move(children));
}

const LocalMeasurement& ProtocolTree::measurement() const {
  if (!node_) throw ProtocolError("leaf has no measurement");
  return node_->measurement;
}

const std::vector<ProtocolTree>& ProtocolTree::children() const {
  if (!node_) throw ProtocolError("leaf has no children");
  return node_->children;
}

int ProtocolTree::depth() const {
  if (!node_) return 0;
  int deepest = 0;
  for (const auto& c : node_->children) deepest = std::max(deepest, c.depth());
  return deepest + 1;
}

std::vector<MeasurementBranch> apply_local_measurement(const Ensemble& e, const LocalMeasurement& m) {
  m.validate(e.layout());
  std::vector<MeasurementBranch> branches;
  for (const auto& out : measure(e.layout(), weighted_members(e), m, nullptr)) {
    if (out.mass < kOutcomePruneTol) continue;
    std::vector<std::size_t> sources;
    for (const auto& wm : out.members) sources.push_back(wm.source);
    branches.push_back({out.index, out.mass, normalized_ensemble(e.layout(), out), std::move(sources)});
  }
  return branches;
}

Lemma1Report lemma1_check(const Ensemble& e, const LocalMeasurement& m) {
  m.validate(e.layout());
  Eigen::MatrixXd joint;
  const std::vector<Outcome> outcomes = measure(e.layout(), weighted_members(e), m, &joint);

  Lemma1Report r;
  r.info_gained = mutual_information(joint);
  r.chi_before = holevo_chi(e);
  for (const auto& out : outcomes) {
    if (out.mass < kOutcomePruneTol) continue;
    r.avg_chi_after += out.mass * holevo_chi(normalized_ensemble(e.layout(), out));
  }
  r.slack = r.chi_before - r.avg_chi_after - r.info_gained;
  return r;
}

ProtocolResult run_protocol(const Ensemble& e, const ProtocolTree& tree, int max_depth) {
  if (tree.depth() > max_depth)
    throw ProtocolError("protocol depth " + std::to_string(tree.depth()) + " exceeds limit " +
                        std::to_string(max_depth));
  validate_tree(tree, e.layout());

  Walker walker{e.layout(), {}, {}};
  walker.walk(tree, weighted_members(e));
  ProtocolResult result = std::move(walker.result);

  std::map<std::vector<int>, Index> columns;
  for (const auto& row : result.transcripts) columns.emplace(row.transcript, 0);
  Index next = 0;
  for (auto& [key, col] : columns) col = next++;
  Eigen::MatrixXd joint = Eigen::MatrixXd::Zero(static_cast<Index>(e.size()), next);
  for (const auto& row : result.transcripts)
    joint(static_cast<Index>(row.member), columns.at(row.transcript)) += row.probability;
  result.extracted_info = mutual_information(joint);
  return result;
}

ProtocolTree protocol_from_json(const Json& j) {
  if (j.is_null()) return ProtocolTree::leaf();
  if (!j.is_object()) throw ParseError("protocol node must be an object or null");
  if (!j.contains("party") || !j["party"].is_number_integer())
    throw ParseError("protocol node: missing integer field \"party\"");
  if (!j.contains("kraus") || !j["kraus"].is_array())
    throw ParseError("protocol node: missing list field \"kraus\"");

  LocalMeasurement m;
  m.party = j["party"].get<int>();
  for (std::size_t y = 0; y < j["kraus"].size(); ++y)
    m.kraus.push_back(matrix_from_json(j["kraus"][y], "kraus[" + std::to_string(y) + "]"));

  if (!j.contains("children")) return ProtocolTree::measure(std::move(m));
  if (!j["children"].is_array()) throw ParseError("protocol node: \"children\" must be a list");
  std::vector<ProtocolTree> children;
  for (const auto& c : j["children"]) children.push_back(protocol_from_json(c));
  return ProtocolTree::measure(std::move(m), std::move(children));
}

Json protocol_to_json(const ProtocolTree& tree) {
  if (tree.is_leaf()) return nullptr;
  Json kraus = Json::array();
  for (const auto& k : tree.measurement().kraus) kraus.push_back(matrix_to_json(k));
  Json children = Json::array();
  for (const auto& c : tree.children()) children.push_back(protocol_to_json(c));
  return Json{{"party", tree.measurement().party}, {"kraus", std::move(kraus)}, {"children", std::move(children)}};
}

ProtocolTree load_protocol(const std::filesystem::path& path) {
  return protocol_from_json(read_json_file(path));
}

}  // namespace locc
