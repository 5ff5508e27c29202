#include "locc/report.hpp"

#include <cstdio>
#include <sstream>

namespace locc {

std::string format_sig12(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

double round_sig12(double v) { return std::stod(format_sig12(v)); }

namespace {

Json rounded(const std::vector<double>& values) {
  Json out = Json::array();
  for (double v : values) out.push_back(round_sig12(v));
  return out;
}

}  // namespace

Json to_json(const BoundReport& r) {
  return Json{{"party_entropies", rounded(r.party_entropies)},
              {"avg_member_entropy_per_party", rounded(r.avg_member_entropy_per_party)},
              {"argmax_party", r.argmax_party},
              {"bound_bits", round_sig12(r.bound_bits)},
              {"chi_bits", round_sig12(r.chi_bits)},
              {"verdict", to_string(r.verdict)}};
}

Json to_json(const ComplementarityReport& r) {
  return Json{{"lhs_bits", round_sig12(r.lhs)},
              {"capacity_D_bits", round_sig12(r.capacity_D)},
              {"holds", r.holds},
              {"key_surrogate", "E_sq/N"}};
}

Json to_json(const ProtocolResult& r) {
  Json rows = Json::array();
  for (const auto& row : r.transcripts)
    rows.push_back(Json{{"member", row.member},
                        {"transcript", row.transcript},
                        {"probability", round_sig12(row.probability)}});
  return Json{{"extracted_info_bits", round_sig12(r.extracted_info)},
              {"chain_rule_info_bits", round_sig12(r.chain_rule_info)},
              {"transcripts", std::move(rows)}};
}

Json to_json(const Crossings& c) {
  auto one = [](const Crossing& x) {
    return Json{{"a", round_sig12(x.root)}, {"residual", round_sig12(x.residual)}};
  };
  return Json{{"a_low", one(c.low)}, {"a_high", one(c.high)}};
}

std::string to_text(const BoundReport& r) {
  std::ostringstream out;
  out << "single-party entropies S(rho^Bn):";
  for (double s : r.party_entropies) out << ' ' << format_sig12(s);
  out << "\naverage member entropies sum_x p_x S(rho_x^Z):";
  for (double s : r.avg_member_entropy_per_party) out << ' ' << format_sig12(s);
  out << "\nmaximizing party: " << r.argmax_party << '\n'
      << "locally accessible information bound: " << format_sig12(r.bound_bits) << " bits\n"
      << "Holevo information: " << format_sig12(r.chi_bits) << " bits\n"
      << "verdict: " << to_string(r.verdict) << '\n';
  return out.str();
}

std::string to_text(const ComplementarityReport& r) {
  std::ostringstream out;
  out << "complementarity (E_sq/N as key surrogate): " << format_sig12(r.lhs)
      << " <= " << format_sig12(r.capacity_D) << " bits: " << (r.holds ? "holds" : "VIOLATED") << '\n';
  return out.str();
}

std::string to_text(const ProtocolResult& r) {
  std::ostringstream out;
  out << "transcript rows: " << r.transcripts.size() << '\n'
      << "extracted information: " << format_sig12(r.extracted_info) << " bits\n"
      << "chain-rule sum of step gains: " << format_sig12(r.chain_rule_info) << " bits\n";
  return out.str();
}

std::string to_text(const Crossings& c) {
  std::ostringstream out;
  out << "bound < Holevo information for " << format_sig12(c.low.root) << " < a < "
      << format_sig12(c.high.root) << '\n'
      << "a_low = " << format_sig12(c.low.root) << " (residual " << format_sig12(c.low.residual) << ")\n"
      << "a_high = " << format_sig12(c.high.root) << " (residual " << format_sig12(c.high.residual) << ")\n";
  return out.str();
}

EncodingSet encodings_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("encodings") || !j["encodings"].is_array())
    throw ParseError("encoding document needs an \"encodings\" list");
  EncodingSet out;
  if (j.contains("senders")) {
    if (!j["senders"].is_array()) throw ParseError("senders: expected a list of party indices");
    for (const auto& s : j["senders"]) {
      if (!s.is_number_integer()) throw ParseError("senders: expected a list of party indices");
      out.senders.push_back(s.get<int>());
    }
  }
  for (std::size_t x = 0; x < j["encodings"].size(); ++x) {
    const Json& ej = j["encodings"][x];
    const std::string where = "encodings[" + std::to_string(x) + "]";
    if (!ej.is_object() || !ej.contains("p") || !ej["p"].is_number() || !ej.contains("unitary"))
      throw ParseError(where + ": expected { \"p\": number, \"unitary\": matrix }");
    out.encodings.push_back({ej["p"].get<double>(), matrix_from_json(ej["unitary"], where + ".unitary")});
  }
  return out;
}

}  // namespace locc
