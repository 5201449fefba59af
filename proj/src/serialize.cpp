#include "smult/serialize.hpp"

#include <stdexcept>

namespace smult {

using nlohmann::json;

json to_json(const ExactPolynomial& poly) {
  json coeffs = json::array();
  for (const auto& c : poly.coeffs()) coeffs.push_back(to_fraction_string(c));
  return json{{"coeffs", coeffs}};
}

ExactPolynomial polynomial_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("coeffs") || !doc["coeffs"].is_array()) {
    throw std::invalid_argument("polynomial JSON needs a \"coeffs\" array");
  }
  std::vector<ExactRational> coeffs;
  for (const auto& c : doc["coeffs"]) {
    if (!c.is_string()) throw std::invalid_argument("polynomial coefficients must be strings");
    coeffs.push_back(parse_rational(c.get<std::string>()));
  }
  return ExactPolynomial(std::move(coeffs));
}

json to_json(const staircase::TupleProfile& t) { return json{{"rows", t.rows}, {"cols", t.cols}}; }

json to_json(const staircase::ExponentMatrix& e) { return json(e.to_rows()); }

staircase::ExponentMatrix matrix_from_json(const json& doc) {
  if (!doc.is_array()) throw std::invalid_argument("exponent matrix must be a JSON array of rows");
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& row : doc) {
    if (!row.is_array()) throw std::invalid_argument("exponent matrix rows must be arrays");
    auto& out = rows.emplace_back();
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw std::invalid_argument("exponent matrix entries must be integers");
      out.push_back(v.get<std::int64_t>());
    }
  }
  return staircase::ExponentMatrix(rows);
}

json to_json(const identities::ChainCode& code) {
  return json{{"w", code.w}, {"A", code.A}, {"B", code.B}, {"C", code.C}};
}

json to_json(const identities::IdentityResult& result) {
  json out{{"name", result.name},
           {"range", result.range},
           {"checked", result.checked},
           {"skipped", result.skipped},
           {"passed", result.passed}};
  if (result.witness) out["witness"] = *result.witness;
  return out;
}

json to_json(const multiplicity::MultiplicityResult& r) {
  return json{{"m", r.m},
              {"n", r.n},
              {"s", to_fraction_string(r.s)},
              {"p", r.p},
              {"fitted_polynomial", to_json(r.fitted_polynomial)},
              {"sample_exponents", r.exponents},
              {"h_s", to_fraction_string(r.h_s)},
              {"normalizer", to_fraction_string(r.normalizer)},
              {"e_s", to_fraction_string(r.e_s)}};
}

json to_json(const multiplicity::NonPolynomialReport& report) {
  json rows = json::array();
  for (const auto& row : report.rows) {
    json j{{"e", row.e},
           {"q", row.q},
           {"r", row.r},
           {"parity", row.e % 2 == 0 ? "even" : "odd"},
           {"length", to_decimal_string(row.length)}};
    if (row.expected) {
      j["expected"] = to_fraction_string(*row.expected);
      j["match"] = row.matches();
    }
    rows.push_back(std::move(j));
  }
  return json{{"p", report.p},
              {"s", to_fraction_string(report.s)},
              {"rows", rows},
              {"all_match", report.all_match()}};
}

}  // namespace smult
