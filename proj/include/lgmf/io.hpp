#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "lgmf/matfac.hpp"

namespace lgmf {

using json = nlohmann::json;

/// {"vars": [...], "potential": "...", "P": [[...]], "Q": [[...]]} with
/// canonical polynomial strings.
json to_json(const MatrixFactorization& x);
json to_json(const PolyMatrix& m);
/// Morphism document: {"vars", "source", "target", "alpha", "beta"}.
json to_json(const Morphism& m);

/// Throws IoError on a malformed document, ParseError / UndeclaredVariable on
/// a bad entry and NotAFactorization if the pair does not factor.
MatrixFactorization factorization_from_json(const json& doc);
PolyMatrix matrix_from_json(const json& doc, const std::vector<Variable>& registry);
Morphism morphism_from_json(const json& doc);

/// Canonical text: two-space indented JSON and a trailing newline.
std::string serialize(const MatrixFactorization& x);
std::string serialize(const Morphism& m);
MatrixFactorization parse_factorization(std::string_view text);
Morphism parse_morphism(std::string_view text);

MatrixFactorization read_factorization(const std::filesystem::path& path);
std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace lgmf
