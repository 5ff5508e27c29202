#pragma once

// Machine-readable (JSON) and human-readable renderings of results.
// All numbers are rounded to 12 significant digits.

#include <string>

#include "locc/bounds.hpp"
#include "locc/ensemble_io.hpp"
#include "locc/protocol.hpp"
#include "locc/repro.hpp"

namespace locc {

std::string format_sig12(double v);
double round_sig12(double v);

Json to_json(const BoundReport& r);
Json to_json(const ComplementarityReport& r);
Json to_json(const ProtocolResult& r);
Json to_json(const Crossings& c);

std::string to_text(const BoundReport& r);
std::string to_text(const ComplementarityReport& r);
std::string to_text(const ProtocolResult& r);
std::string to_text(const Crossings& c);

// Dense-coding encoding file:
//   { "senders": [1, ...],                      (optional; default leading parties)
//     "encodings": [ { "p": 0.25, "unitary": matrix }, ... ] }
struct EncodingSet {
  std::vector<int> senders;
  std::vector<Encoding> encodings;
};

EncodingSet encodings_from_json(const Json& j);

}  // namespace locc
