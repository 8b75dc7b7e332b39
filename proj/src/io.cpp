#include "lgmf/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace lgmf {

namespace {

json vars_json(const std::vector<Variable>& vars) {
  json out = json::array();
  for (const auto& v : vars) out.push_back(v.str());
  return out;
}

std::vector<Variable> vars_from_json(const json& doc) {
  if (!doc.is_array()) throw IoError("\"vars\" must be an array of names");
  std::set<Variable> out;
  for (const auto& v : doc) {
    if (!v.is_string()) throw IoError("\"vars\" must be an array of names");
    out.insert(Variable::parse(v.get<std::string>()));
  }
  return {out.begin(), out.end()};
}

const json& field(const json& doc, const char* name) {
  if (!doc.is_object()) throw IoError("expected a JSON object");
  auto it = doc.find(name);
  if (it == doc.end()) throw IoError(std::string("missing field \"") + name + "\"");
  return *it;
}

std::string poly_text(const json& entry) {
  if (entry.is_string()) return entry.get<std::string>();
  if (entry.is_number_integer()) return entry.dump();
  throw IoError("matrix entries must be polynomial strings");
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw IoError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

json to_json(const PolyMatrix& m) {
  json out = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    out.push_back(std::move(row));
  }
  return out;
}

json to_json(const MatrixFactorization& x) {
  return json{{"vars", vars_json(x.vars())},
              {"potential", x.potential().str()},
              {"P", to_json(x.p())},
              {"Q", to_json(x.q())}};
}

json to_json(const Morphism& m) {
  std::set<Variable> vars(m.source().vars().begin(), m.source().vars().end());
  vars.insert(m.target().vars().begin(), m.target().vars().end());
  return json{{"vars", vars_json({vars.begin(), vars.end()})},
              {"source", to_json(m.source())},
              {"target", to_json(m.target())},
              {"alpha", to_json(m.alpha())},
              {"beta", to_json(m.beta())}};
}

PolyMatrix matrix_from_json(const json& doc, const std::vector<Variable>& registry) {
  if (!doc.is_array()) throw IoError("a matrix must be an array of rows");
  const auto rows = static_cast<Eigen::Index>(doc.size());
  Eigen::Index cols = -1;
  PolyMatrix out;
  for (Eigen::Index i = 0; i < rows; ++i) {
    const json& row = doc[static_cast<std::size_t>(i)];
    if (!row.is_array()) throw IoError("a matrix must be an array of rows");
    if (cols < 0) {
      cols = static_cast<Eigen::Index>(row.size());
      out = zeros(rows, cols);
    } else if (static_cast<Eigen::Index>(row.size()) != cols) {
      throw IoError("matrix rows have different lengths");
    }
    for (Eigen::Index j = 0; j < cols; ++j) {
      out(i, j) = parse_poly(poly_text(row[static_cast<std::size_t>(j)]), registry);
    }
  }
  if (rows == 0) out = zeros(0, 0);
  return out;
}

MatrixFactorization factorization_from_json(const json& doc) {
  auto vars = vars_from_json(field(doc, "vars"));
  const json& pot = field(doc, "potential");
  if (!pot.is_string()) throw IoError("\"potential\" must be a polynomial string");
  Polynomial f = parse_poly(pot.get<std::string>(), vars);
  return MatrixFactorization(matrix_from_json(field(doc, "P"), vars),
                             matrix_from_json(field(doc, "Q"), vars), std::move(f), vars);
}

Morphism morphism_from_json(const json& doc) {
  auto vars = vars_from_json(field(doc, "vars"));
  return Morphism(factorization_from_json(field(doc, "source")),
                  factorization_from_json(field(doc, "target")),
                  matrix_from_json(field(doc, "alpha"), vars),
                  matrix_from_json(field(doc, "beta"), vars));
}

std::string serialize(const MatrixFactorization& x) { return to_json(x).dump(2) + "\n"; }
std::string serialize(const Morphism& m) { return to_json(m).dump(2) + "\n"; }

MatrixFactorization parse_factorization(std::string_view text) {
  return factorization_from_json(parse_json(text));
}

Morphism parse_morphism(std::string_view text) { return morphism_from_json(parse_json(text)); }

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

MatrixFactorization read_factorization(const std::filesystem::path& path) {
  return parse_factorization(read_text(path));
}

}  // namespace lgmf
