#include "parallax/json_io.hpp"

#include <cmath>
#include <fstream>

namespace parallax {

nlohmann::json matrix_to_json(const ComplexMatrix& a) {
  nlohmann::json data = nlohmann::json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      data.push_back({a(i, j).real(), a(i, j).imag()});
  return {{"rows", a.rows()}, {"cols", a.cols()}, {"data", std::move(data)}};
}

ComplexMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
      !j.contains("data"))
    throw ParseError("matrix JSON needs rows, cols and data fields");
  if (!j["rows"].is_number_integer() || !j["cols"].is_number_integer())
    throw ParseError("matrix rows/cols must be integers");
  const std::int64_t rows = j["rows"].get<std::int64_t>();
  const std::int64_t cols = j["cols"].get<std::int64_t>();
  if (rows < 1 || cols < 1 || rows > 4096 || cols > 4096)
    throw ParseError("matrix shape out of range");
  const auto& data = j["data"];
  if (!data.is_array() ||
      data.size() != static_cast<std::size_t>(rows * cols))
    throw ParseError("matrix data must hold rows*cols [re, im] pairs");

  ComplexMatrix a(rows, cols);
  std::size_t idx = 0;
  for (std::int64_t i = 0; i < rows; ++i) {
    for (std::int64_t j2 = 0; j2 < cols; ++j2, ++idx) {
      const auto& entry = data[idx];
      if (!entry.is_array() || entry.size() != 2 ||
          !entry[0].is_number() || !entry[1].is_number())
        throw ParseError("matrix entries must be [re, im] number pairs");
      const double re = entry[0].get<double>();
      const double im = entry[1].get<double>();
      if (!std::isfinite(re) || !std::isfinite(im))
        throw ParseError("matrix entries must be finite");
      a(i, j2) = Complex(re, im);
    }
  }
  return a;
}

ComplexMatrix load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open matrix file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("invalid JSON in '" + path + "': " + e.what());
  }
  return matrix_from_json(j);
}

void save_matrix(const std::string& path, const ComplexMatrix& a) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write matrix file '" + path + "'");
  out << matrix_to_json(a).dump(2) << "\n";
}

}  // namespace parallax
