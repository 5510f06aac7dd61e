#include "latred/io.hpp"

#include <fstream>

namespace latred {

namespace {

Rational entry_to_rational(const Json& e) {
  if (e.is_number_integer()) return Rational(e.get<long long>());
  if (e.is_number_float()) {
    // only exact binary fractions appear here; route through the decimal text
    return parse_rational(e.dump());
  }
  if (e.is_string()) return parse_rational(e.get<std::string>());
  throw ParseError("matrix entry must be a number or a string");
}

double entry_to_double(const Json& e) {
  if (e.is_number()) return e.get<double>();
  if (e.is_string()) return to_double(parse_rational(e.get<std::string>()));
  throw ParseError("matrix entry must be a number or a string");
}

void check_rectangular(const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty())
    throw ParseError("matrix must be a non-empty array of arrays");
  const std::size_t cols = j[0].size();
  for (const auto& row : j)
    if (!row.is_array() || row.size() != cols) throw ParseError("ragged matrix rows");
}

}  // namespace

RealMatrix load_real_matrix(const Json& j) {
  check_rectangular(j);
  RealMatrix m(j.size(), j[0].size());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index c = 0; c < m.cols(); ++c) m(i, c) = entry_to_double(j[i][c]);
  if (!all_finite(m)) throw ParseError("matrix entries must be finite");
  return m;
}

RationalMatrix load_rational_matrix(const Json& j) {
  check_rectangular(j);
  RationalMatrix m(j.size(), j[0].size());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index c = 0; c < m.cols(); ++c) m(i, c) = entry_to_rational(j[i][c]);
  return m;
}

Json real_matrix_to_json(const RealMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(i, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json real_vector_to_json(const RealVector& v) {
  Json row = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) row.push_back(v[i]);
  return row;
}

Json rational_matrix_to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  const Rational big(BigInt(1) << 53);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const Rational& x = m(i, c);
      if (is_integer(x) && x < big && x > -big)
        row.push_back(numerator(x).convert_to<long long>());
      else
        row.push_back(to_string(x));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

std::string data_path(const std::string& filename) {
  return std::string(LATRED_DATA_DIR) + "/" + filename;
}

}  // namespace latred
