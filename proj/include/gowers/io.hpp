#pragma once

#include <string>

#include <json.hpp>

#include "gowers/circuit.hpp"
#include "gowers/poly.hpp"
#include "gowers/table.hpp"

namespace gowers::io {

// FunctionTable interchange format: {p, n, values: [[re, im], ...]} in
// linear-index order.
nlohmann::json table_to_json(const FunctionTable& f);
FunctionTable table_from_json(const nlohmann::json& j);
void save_table(const FunctionTable& f, const std::string& path);
FunctionTable load_table(const std::string& path);

// PolynomialSpec format: {p, n, terms: [{exps: [...], coeff}]}.
nlohmann::json polynomial_to_json(const poly::PolynomialSpec& P);
poly::PolynomialSpec polynomial_from_json(const nlohmann::json& j);

// Compact polynomial strings like "2*x0*x1 + x2^2" (also accepts '-' signs;
// negative coefficients wrap mod p).
poly::PolynomialSpec parse_polynomial(const GroupParams& g, const std::string& text);

nlohmann::json plan_to_json(const circuit::CircuitPlan& plan);
nlohmann::json run_result_to_json(const circuit::RunResult& rr);

} // namespace gowers::io
