#pragma once

// JSON-compatible file format for ensembles:
//
//   { "dims": [d1, ..., dN],
//     "members": [ { "p": 0.5, "pure": [[re, im], ...] },
//                  { "p": 0.5, "mixed": [[[re, im], ...], ...] } ] }
//
// Complex numbers are always [re, im] pairs; matrices are row-major lists of rows.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "locc/ensemble.hpp"

namespace locc {

using Json = nlohmann::json;

Complex complex_from_json(const Json& j, const std::string& where);
Json complex_to_json(const Complex& z);
ComplexVector vector_from_json(const Json& j, const std::string& where);
Json vector_to_json(const ComplexVector& v);
ComplexMatrix matrix_from_json(const Json& j, const std::string& where);
Json matrix_to_json(const ComplexMatrix& m);

Ensemble ensemble_from_json(const Json& j);
Json ensemble_to_json(const Ensemble& e);

// Missing or unreadable file -> IoError; not JSON -> ParseError.
Json read_json_file(const std::filesystem::path& path);
void write_json_file(const Json& j, const std::filesystem::path& path);

Ensemble load_ensemble(const std::filesystem::path& path);
void save_ensemble(const Ensemble& e, const std::filesystem::path& path);

// A single state: either { "dims": [...], "pure": [...] | "mixed": [...] } or an
// ensemble document holding exactly one member.
QuantumState state_from_json(const Json& j);
QuantumState load_state(const std::filesystem::path& path);

}  // namespace locc
