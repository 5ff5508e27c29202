#include "locc/ensemble_io.hpp"

#include <fstream>

namespace locc {

namespace {

double number_from_json(const Json& j, const std::string& where) {
  if (!j.is_number()) throw ParseError(where + ": expected a number");
  return j.get<double>();
}

const Json& field(const Json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + ": missing field \"" + key + "\"");
  return *it;
}

}  // namespace

Complex complex_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) throw ParseError(where + ": expected [re, im] pair");
  return {number_from_json(j[0], where), number_from_json(j[1], where)};
}

Json complex_to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

ComplexVector vector_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected a list of [re, im] pairs");
  ComplexVector v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i)
    v(static_cast<Index>(i)) = complex_from_json(j[i], where + "[" + std::to_string(i) + "]");
  return v;
}

Json vector_to_json(const ComplexVector& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

ComplexMatrix matrix_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty() || !j[0].is_array())
    throw ParseError(where + ": expected a nonempty list of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].size();
  ComplexMatrix m(static_cast<Index>(rows), static_cast<Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array()) throw ParseError(where + ": row " + std::to_string(r) + " is not a list");
    if (j[r].size() != cols) throw ShapeError(where + ": ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c)
      m(static_cast<Index>(r), static_cast<Index>(c)) = complex_from_json(
          j[r][c], where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
  }
  return m;
}

Json matrix_to_json(const ComplexMatrix& m) {
  Json out = Json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Ensemble ensemble_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("ensemble document must be an object");
  const Json& dims_json = field(j, "dims", "ensemble");
  if (!dims_json.is_array()) throw ParseError("dims: expected a list of integers");
  std::vector<int> dims;
  for (const auto& d : dims_json) {
    if (!d.is_number_integer()) throw ParseError("dims: expected a list of integers");
    dims.push_back(d.get<int>());
  }
  SystemLayout layout(std::move(dims));

  const Json& members_json = field(j, "members", "ensemble");
  if (!members_json.is_array()) throw ParseError("members: expected a list");
  std::vector<EnsembleMember> members;
  for (std::size_t x = 0; x < members_json.size(); ++x) {
    const std::string where = "members[" + std::to_string(x) + "]";
    const Json& mj = members_json[x];
    if (!mj.is_object()) throw ParseError(where + ": expected an object");
    const double p = number_from_json(field(mj, "p", where), where + ".p");
    const bool has_pure = mj.contains("pure");
    const bool has_mixed = mj.contains("mixed");
    if (has_pure == has_mixed)
      throw ParseError(where + ": exactly one of \"pure\" or \"mixed\" is required");
    if (has_pure) {
      members.push_back(
          {p, QuantumState::pure(layout, vector_from_json(mj["pure"], where + ".pure"))});
    } else {
      members.push_back(
          {p, QuantumState::mixed(layout, matrix_from_json(mj["mixed"], where + ".mixed"))});
    }
  }
  return Ensemble(std::move(layout), std::move(members));
}

Json ensemble_to_json(const Ensemble& e) {
  Json members = Json::array();
  for (const auto& m : e.members()) {
    Json mj;
    mj["p"] = m.probability;
    if (m.state.is_pure()) mj["pure"] = vector_to_json(m.state.amplitudes());
    else mj["mixed"] = matrix_to_json(m.state.density());
    members.push_back(std::move(mj));
  }
  return Json{{"dims", e.layout().dims()}, {"members", std::move(members)}};
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& ex) {
    throw ParseError(path.string() + ": " + ex.what());
  }
}

void write_json_file(const Json& j, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  out << j.dump(1) << '\n';
  if (!out) throw IoError("write failed for " + path.string());
}

Ensemble load_ensemble(const std::filesystem::path& path) {
  return ensemble_from_json(read_json_file(path));
}

QuantumState state_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("state document must be an object");
  if (j.contains("members")) {
    Ensemble e = ensemble_from_json(j);
    if (e.size() != 1) throw ValidationError("state document must hold exactly one member");
    return e[0].state;
  }
  Json wrapped{{"dims", field(j, "dims", "state")}, {"members", Json::array()}};
  Json member = {{"p", 1.0}};
  if (j.contains("pure")) member["pure"] = j["pure"];
  if (j.contains("mixed")) member["mixed"] = j["mixed"];
  wrapped["members"].push_back(std::move(member));
  return ensemble_from_json(wrapped)[0].state;
}

QuantumState load_state(const std::filesystem::path& path) {
  return state_from_json(read_json_file(path));
}

void save_ensemble(const Ensemble& e, const std::filesystem::path& path) {
  write_json_file(ensemble_to_json(e), path);
}

}  // namespace locc
