#include "polyloc/io.hpp"

#include <fstream>
#include <sstream>

#include "polyloc/errors.hpp"

namespace polyloc {

namespace {

Complex parse_complex(const Json& v, const std::string& where) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
        throw ParseError(where + ": expected an [re, im] pair of numbers");
    }
    return {v[0].get<double>(), v[1].get<double>()};
}

int parse_dimension(const Json& doc, const char* field, int minimum) {
    if (!doc.contains(field)) {
        throw ParseError(std::string(field) + ": missing field");
    }
    const Json& v = doc.at(field);
    if (!v.is_number_integer() || v.get<long long>() < minimum) {
        throw ParseError(std::string(field) + ": expected an integer >= " + std::to_string(minimum));
    }
    return static_cast<int>(v.get<long long>());
}

}  // namespace

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json complex_list_to_json(const std::vector<Complex>& values) {
    Json out = Json::array();
    for (const auto& z : values) {
        out.push_back(complex_to_json(z));
    }
    return out;
}

Json polynomial_to_json(const MatrixPolynomial& p) {
    Json coeffs = Json::array();
    for (const auto& a : p.coeffs()) {
        Json rows = Json::array();
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            Json row = Json::array();
            for (Eigen::Index j = 0; j < a.cols(); ++j) {
                row.push_back(complex_to_json(a(i, j)));
            }
            rows.push_back(std::move(row));
        }
        coeffs.push_back(std::move(rows));
    }
    Json doc;
    doc["n"] = p.size();
    doc["m"] = p.degree();
    doc["coeffs"] = std::move(coeffs);
    return doc;
}

MatrixPolynomial polynomial_from_json(const Json& doc) {
    if (!doc.is_object()) {
        throw ParseError("document: expected an object with fields n, m, coeffs");
    }
    const int n = parse_dimension(doc, "n", 1);
    const int m = parse_dimension(doc, "m", 0);
    if (!doc.contains("coeffs") || !doc.at("coeffs").is_array()) {
        throw ParseError("coeffs: expected a list of coefficient matrices");
    }
    const Json& list = doc.at("coeffs");
    if (list.size() != static_cast<std::size_t>(m) + 1) {
        throw ParseError("coeffs: expected m+1 = " + std::to_string(m + 1) + " coefficients, got " +
                         std::to_string(list.size()));
    }
    std::vector<ComplexMatrix> coeffs;
    coeffs.reserve(list.size());
    for (std::size_t c = 0; c < list.size(); ++c) {
        const std::string where = "coeffs[" + std::to_string(c) + "]";
        const Json& rows = list[c];
        if (!rows.is_array() || rows.size() != static_cast<std::size_t>(n)) {
            throw ParseError(where + ": expected " + std::to_string(n) + " rows");
        }
        ComplexMatrix a(n, n);
        for (int i = 0; i < n; ++i) {
            const std::string row_where = where + "[" + std::to_string(i) + "]";
            const Json& row = rows[static_cast<std::size_t>(i)];
            if (!row.is_array() || row.size() != static_cast<std::size_t>(n)) {
                throw ParseError(row_where + ": expected " + std::to_string(n) + " entries");
            }
            for (int j = 0; j < n; ++j) {
                a(i, j) = parse_complex(row[static_cast<std::size_t>(j)],
                                        row_where + "[" + std::to_string(j) + "]");
            }
        }
        if (!all_finite(a)) {
            throw ParseError(where + ": entries must be finite");
        }
        coeffs.push_back(std::move(a));
    }
    if (coeffs.back().isZero(0.0) && m > 0) {
        throw ParseError("coeffs[" + std::to_string(m) + "]: leading coefficient is the zero matrix");
    }
    try {
        return MatrixPolynomial(std::move(coeffs));
    } catch (const Error& e) {
        throw ParseError(std::string("coeffs: ") + e.what());
    }
}

std::string save_polynomial(const MatrixPolynomial& p) { return polynomial_to_json(p).dump() + "\n"; }

MatrixPolynomial load_polynomial(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("document: ") + e.what());
    }
    return polynomial_from_json(doc);
}

MatrixPolynomial load_polynomial_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("input: cannot open " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_polynomial(buf.str());
}

}  // namespace polyloc
