#pragma once

#include <fstream>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "irshho/beamforming.hpp"
#include "irshho/channel.hpp"
#include "irshho/types.hpp"

// JSON fixtures. Complex numbers are [re, im] pairs; complex matrices are
// row-major nested arrays.

namespace irshho {

using Json = nlohmann::json;

inline Json to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

inline Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("complex_from_json: expected [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

inline Json to_json(const ComplexVector& v) {
  Json a = Json::array();
  for (int i = 0; i < v.size(); ++i) a.push_back(to_json(v[i]));
  return a;
}

inline Json to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

inline Json to_json(const Vector& v) {
  Json a = Json::array();
  for (int i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

inline ComplexVector complex_vector_from_json(const Json& j) {
  ComplexVector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<int>(i)] = complex_from_json(j[i]);
  return v;
}

inline ComplexMatrix complex_matrix_from_json(const Json& j) {
  const int rows = static_cast<int>(j.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(j[0].size());
  ComplexMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (static_cast<int>(j[r].size()) != cols)
      throw std::invalid_argument("complex_matrix_from_json: ragged rows");
    for (int c = 0; c < cols; ++c) m(r, c) = complex_from_json(j[r][c]);
  }
  return m;
}

inline Vector vector_from_json(const Json& j) {
  Vector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<int>(i)] = j[i].get<double>();
  return v;
}

inline Json to_json(const ChannelSet& ch) {
  return Json{{"h_d", to_json(ch.h_d)}, {"G", to_json(ch.g)}, {"h_r", to_json(ch.h_r)}};
}

inline ChannelSet channel_set_from_json(const Json& j) {
  ChannelSet ch;
  ch.h_d = complex_vector_from_json(j.at("h_d"));
  ch.g = complex_matrix_from_json(j.at("G"));
  ch.h_r = complex_vector_from_json(j.at("h_r"));
  return ch;
}

inline Json to_json(const BeamformingSolution& s) {
  return Json{{"w", to_json(s.w)}, {"theta", to_json(s.theta)}};
}

inline BeamformingSolution solution_from_json(const Json& j) {
  return {complex_vector_from_json(j.at("w")), vector_from_json(j.at("theta"))};
}

inline void save_json(const Json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("save_json: cannot open " + path);
  out << j.dump(2) << '\n';
}

inline Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_json: cannot open " + path);
  return Json::parse(in);
}

}  // namespace irshho
