#include "isospec/state_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace isospec {

namespace {

using nlohmann::json;

std::size_t read_dim(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer() || doc[key].get<long long>() <= 0) {
    throw FormatError(std::string("field \"") + key + "\" must be a positive integer");
  }
  return doc[key].get<std::size_t>();
}

const json& read_rows(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array()) {
    throw FormatError(std::string("field \"") + key + "\" must be an array of rows");
  }
  for (const auto& row : doc[key]) {
    if (!row.is_array()) throw FormatError(std::string("field \"") + key + "\" must be an array of rows");
    for (const auto& v : row) {
      if (!v.is_number()) throw FormatError(std::string("field \"") + key + "\" holds a non-numeric entry");
    }
  }
  return doc[key];
}

}  // namespace

BipartiteState parse_state_json(const std::string& text, double tol) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw FormatError("state file must hold a JSON object");

  const std::size_t dim_a = read_dim(doc, "dimA");
  const std::size_t dim_b = read_dim(doc, "dimB");
  const json& re = read_rows(doc, "re");
  const json& im = read_rows(doc, "im");

  const std::size_t n = re.size();
  std::ostringstream shape;
  if (im.size() != n) {
    shape << "\"re\" has " << n << " rows but \"im\" has " << im.size();
    throw InvalidStateError(StateViolation::Shape, shape.str());
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (re[i].size() != n || im[i].size() != n) {
      shape << "row " << i << " does not have " << n << " entries";
      throw InvalidStateError(StateViolation::Shape, shape.str());
    }
  }
  if (n != dim_a * dim_b) {
    shape << "matrix is " << n << "x" << n << " but dimA*dimB = " << dim_a * dim_b;
    throw InvalidStateError(StateViolation::Shape, shape.str());
  }

  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Complex(re[i][j].get<double>(), im[i][j].get<double>());
  }
  return BipartiteState(std::move(m), dim_a, dim_b, tol);
}

BipartiteState read_state_file(const std::filesystem::path& path, double tol) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open state file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_state_json(buf.str(), tol);
}

std::string state_to_json(const BipartiteState& s) {
  const auto& m = s.matrix();
  json re = json::array();
  json im = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json re_row = json::array();
    json im_row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      re_row.push_back(m(i, j).real());
      im_row.push_back(m(i, j).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  nlohmann::ordered_json doc;
  doc["dimA"] = s.dim_a();
  doc["dimB"] = s.dim_b();
  doc["re"] = std::move(re);
  doc["im"] = std::move(im);
  return doc.dump() + "\n";
}

void write_state_file(const std::filesystem::path& path, const BipartiteState& s) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write state file " + path.string());
  out << state_to_json(s);
}

}  // namespace isospec
