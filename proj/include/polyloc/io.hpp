#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"
#include "polyloc/matpoly.hpp"

namespace polyloc {

using Json = nlohmann::ordered_json;

/// [re, im]
Json complex_to_json(Complex z);
Json complex_list_to_json(const std::vector<Complex>& values);

/// Polynomial document: {"n": n, "m": m, "coeffs": [A_0, ..., A_m]} where each
/// A_i is a list of n rows of n [re, im] pairs.
Json polynomial_to_json(const MatrixPolynomial& p);
MatrixPolynomial polynomial_from_json(const Json& doc);

/// Canonical text form: compact JSON followed by a newline.
std::string save_polynomial(const MatrixPolynomial& p);
MatrixPolynomial load_polynomial(std::string_view text);
MatrixPolynomial load_polynomial_file(const std::filesystem::path& path);

}  // namespace polyloc
