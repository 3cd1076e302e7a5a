#include "diagcat/opmodel_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace diagcat {

namespace {

using nlohmann::json;

MultiMatrixAlgebra parse_algebra(const json& j, const std::string& label) {
  if (!j.is_object() || !j.contains("blocks") || !j["blocks"].is_array()) {
    throw ParseError("model: \"" + label + "\" needs a \"blocks\" array");
  }
  MultiMatrixAlgebra a;
  for (const auto& v : j["blocks"]) {
    if (!v.is_number_integer()) {
      throw ParseError("model: block sizes must be integers");
    }
    a.blocks.push_back(v.get<int>());
  }
  return a;
}

Eigen::MatrixXd parse_matrix(const json& j) {
  if (!j.is_array() || j.empty()) {
    throw ParseError("model: state blocks must be non-empty matrices");
  }
  const int rows = static_cast<int>(j.size());
  int cols = -1;
  Eigen::MatrixXd m;
  for (int r = 0; r < rows; ++r) {
    const auto& row = j[r];
    if (!row.is_array()) throw ParseError("model: matrix rows must be arrays");
    if (cols < 0) {
      cols = static_cast<int>(row.size());
      m.resize(rows, cols);
    } else if (static_cast<int>(row.size()) != cols) {
      throw ParseError("model: ragged matrix");
    }
    for (int c = 0; c < cols; ++c) {
      if (!row[c].is_number()) {
        throw ParseError("model: matrix entries must be numbers");
      }
      m(r, c) = row[c].get<double>();
    }
  }
  return m;
}

}  // namespace

ModelFile load_model(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("model: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("model: top level must be an object");
  for (const char* key : {"B", "D", "multiplicity", "state"}) {
    if (!j.contains(key)) {
      throw ParseError(std::string("model: missing \"") + key + "\"");
    }
  }

  ModelFile out;
  out.inclusion.b = parse_algebra(j["B"], "B");
  out.inclusion.d = parse_algebra(j["D"], "D");

  const auto& mult = j["multiplicity"];
  if (!mult.is_array()) throw ParseError("model: \"multiplicity\" must be an array");
  for (const auto& row : mult) {
    if (!row.is_array()) {
      throw ParseError("model: multiplicity rows must be arrays");
    }
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) {
        throw ParseError("model: multiplicities must be integers");
      }
      r.push_back(v.get<int>());
    }
    out.inclusion.multiplicity.push_back(std::move(r));
  }

  json state = j["state"];
  if (state.is_object() && state.contains("Q")) state = state["Q"];
  if (state.is_string() && state.get<std::string>() == "canonical") {
    out.canonical_state = true;
  } else if (state.is_array()) {
    if (static_cast<int>(state.size()) != out.inclusion.d.block_count()) {
      throw ParseError("model: state needs one Q block per D block");
    }
    for (const auto& block : state) out.state.q.push_back(parse_matrix(block));
  } else {
    throw ParseError("model: \"state\" must be \"canonical\" or a Q block list");
  }

  try {
    out.inclusion.validate();
    if (out.canonical_state) {
      out.state = canonical_trace(out.inclusion.d);
    } else {
      out.state.validate(out.inclusion.d);
    }
  } catch (const Error& e) {
    throw ParseError(std::string("model: ") + e.what());
  }
  return out;
}

ModelFile load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open model file \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_model(buf.str());
}

}  // namespace diagcat
