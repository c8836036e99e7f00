#include "mimocs/matrix_io.hpp"

#include <cstdio>
#include <fstream>

#include <nlohmann/json.hpp>

namespace mimocs {

using nlohmann::json;

json matrix_to_json(const Mat& m) {
  json data = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      data.push_back({m(r, c).real(), m(r, c).imag()});
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"complex", true}, {"data", data}};
}

json matrix_to_json(const RealMat& m) {
  json data = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) data.push_back(m(r, c));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"complex", false}, {"data", data}};
}

Mat matrix_from_json(const json& j) {
  const auto rows = j.at("rows").get<Eigen::Index>();
  const auto cols = j.at("cols").get<Eigen::Index>();
  const auto& data = j.at("data");
  if (static_cast<Eigen::Index>(data.size()) != rows * cols)
    throw dimension_mismatch("matrix JSON: data length != rows*cols");
  Mat m(rows, cols);
  Eigen::Index i = 0;
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c, ++i) {
      const auto& e = data[i];
      if (e.is_array())
        m(r, c) = cd(e.at(0).get<double>(), e.at(1).get<double>());
      else
        m(r, c) = cd(e.get<double>(), 0.0);
    }
  return m;
}

json vector_to_json(const Vec& v) {
  Mat m(v.size(), 1);
  m.col(0) = v;
  return matrix_to_json(m);
}

Vec vector_from_json(const json& j) {
  Mat m = matrix_from_json(j);
  if (m.cols() != 1) throw dimension_mismatch("vector JSON must have cols == 1");
  return m.col(0);
}

void write_json_atomic(const std::string& path, const json& j) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw Error("IoError", "cannot open " + tmp + " for writing");
    out << j.dump(2) << '\n';
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw Error("IoError", "rename failed for " + path);
}

}  // namespace mimocs
