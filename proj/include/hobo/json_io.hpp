/// @file json_io.hpp
/// @brief JSON import/export for the library's value types, plus file
/// loading with format sniffing (JSON object vs plain text).

#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hobo/annealer.hpp"
#include "hobo/compressor.hpp"
#include "hobo/polynomial.hpp"
#include "hobo/tensor.hpp"

namespace hobo {

// {"num_vars": n, "offset": f, "terms": [{"vars": [...], "coef": f}, ...]}
inline nlohmann::json polynomial_to_json(const Polynomial& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const Term& t : p.terms()) {
    terms.push_back({{"vars", t.vars}, {"coef", t.coef}});
  }
  return {{"num_vars", p.num_vars()},
          {"offset", p.offset()},
          {"terms", std::move(terms)}};
}

inline Polynomial polynomial_from_json(const nlohmann::json& j) {
  const int num_vars = j.at("num_vars").get<int>();
  const double offset = j.value("offset", 0.0);
  std::vector<Term> terms;
  for (const auto& jt : j.at("terms")) {
    terms.push_back(
        Term{jt.at("vars").get<std::vector<int>>(), jt.at("coef").get<double>()});
  }
  return Polynomial::from_terms(num_vars, terms, offset);
}

// {"n": n, "order": k, "entries": [flat row-major]}
inline nlohmann::json tensor_to_json(const HoboTensor& t) {
  return {{"n", t.n()}, {"order", t.order()}, {"entries", t.entries()}};
}

inline HoboTensor tensor_from_json(const nlohmann::json& j) {
  HoboTensor t(j.at("n").get<int>(), j.at("order").get<int>());
  auto entries = j.at("entries").get<std::vector<double>>();
  if (entries.size() != t.size()) {
    throw std::invalid_argument("entry count does not match n^order");
  }
  t.entries() = std::move(entries);
  return t;
}

namespace detail {

inline nlohmann::json matrix_rows_json(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Matrix matrix_from_rows_json(const nlohmann::json& j) {
  const int rows = static_cast<int>(j.size());
  const int cols = rows > 0 ? static_cast<int>(j.at(0).size()) : 0;
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const auto& row = j.at(static_cast<std::size_t>(i));
    if (static_cast<int>(row.size()) != cols) {
      throw std::invalid_argument("ragged matrix rows");
    }
    for (int c = 0; c < cols; ++c) m(i, c) = row.at(static_cast<std::size_t>(c)).get<double>();
  }
  return m;
}

}  // namespace detail

// {"sigma": [...], "u": [[row-major rows]], "v": [[...]], "source_shape": [...]}
inline nlohmann::json factors_to_json(const SvdFactors& f) {
  return {{"sigma", f.singular_values},
          {"u", detail::matrix_rows_json(f.left_vectors)},
          {"v", detail::matrix_rows_json(f.right_vectors)},
          {"source_shape", f.source_shape}};
}

inline SvdFactors factors_from_json(const nlohmann::json& j) {
  SvdFactors f;
  f.singular_values = j.at("sigma").get<std::vector<double>>();
  f.left_vectors = detail::matrix_from_rows_json(j.at("u"));
  f.right_vectors = detail::matrix_from_rows_json(j.at("v"));
  f.source_shape = j.at("source_shape").get<std::vector<int>>();
  f.rows = f.left_vectors.rows();
  f.cols = f.right_vectors.rows();
  if (f.left_vectors.cols() != f.rank() || f.right_vectors.cols() != f.rank()) {
    throw std::invalid_argument("factor widths do not match sigma length");
  }
  return f;
}

// {"assignment": [...], "cost": f, "restart_costs": [...], "seed": s}
inline nlohmann::json anneal_result_to_json(const AnnealResult& r) {
  std::vector<int> bits(r.best_assignment.bits().begin(),
                        r.best_assignment.bits().end());
  return {{"assignment", bits},
          {"cost", r.best_cost},
          {"restart_costs", r.restart_costs},
          {"seed", r.seed_used}};
}

/// Failure to read or write a file (distinct from parse/domain errors so
/// callers can report it as a usage problem).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open file for writing: " + path);
  out << contents;
}

/// Loads a polynomial from either format: content starting with '{' is
/// parsed as the JSON form, anything else as the plain-text form.
inline Polynomial load_polynomial(const std::string& path) {
  const std::string text = read_file(path);
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    if (c == '{') return polynomial_from_json(nlohmann::json::parse(text));
    break;
  }
  return parse_text(text);
}

}  // namespace hobo
