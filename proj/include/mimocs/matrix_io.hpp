#pragma once

// Repo-wide matrix JSON format:
//   {"rows": r, "cols": c, "complex": true|false, "data": [[re, im], ...]}
// with "data" row-major; real matrices may use plain scalars in "data".

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "mimocs/common.hpp"

namespace mimocs {

nlohmann::json matrix_to_json(const Mat& m);
nlohmann::json matrix_to_json(const RealMat& m);
Mat matrix_from_json(const nlohmann::json& j);

nlohmann::json vector_to_json(const Vec& v);
Vec vector_from_json(const nlohmann::json& j);

// Writes via temp file + rename so readers never see partial output.
void write_json_atomic(const std::string& path, const nlohmann::json& j);

}  // namespace mimocs
