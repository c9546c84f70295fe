#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "clusterkit/exchange_matrix.hpp"
#include "clusterkit/laurent.hpp"
#include "clusterkit/seed.hpp"
#include "clusterkit/vector_recursions.hpp"

namespace clusterkit {

using Json = nlohmann::json;

/// {"n": int, "b": [[int,...],...]}
Json matrix_to_json(const IntMat& m);
IntMat matrix_from_json(const Json& j); // throws std::invalid_argument

/// {"vars": [...], "terms": [{"c": "int-string", "e": [int,...]}, ...]},
/// terms in lexicographic exponent order, coefficients as decimal strings.
Json poly_to_json(const LaurentPoly& p, const std::vector<std::string>& var_names);
LaurentPoly poly_from_json(const Json& j);

/// {"B": matrix, "x": [poly,...], "y": [{"e": [int,...]},...]}
Json seed_to_json(const Seed& s);
Seed seed_from_json(const Json& j);

/// {"verdict": "finite"|"infinite"|"undecided", "label": string|null, "witness": [int,...]}
Json classification_to_json(const FiniteTypeClass& c);

/// {"check": name, "B": matrix, "word": [...], "pass": bool, "failures": [...]}
Json report_to_json(const CheckReport& r, const IntMat& b, const std::vector<int>& word);

std::vector<std::string> xy_var_names(int rank); // x1..xn, y1..yn
std::vector<std::string> y_var_names(int rank);  // y1..yn

} // namespace clusterkit
