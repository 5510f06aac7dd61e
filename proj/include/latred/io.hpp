#pragma once

#include <json.hpp>
#include <string>

#include "latred/matrix.hpp"

namespace latred {

using Json = nlohmann::ordered_json;

/// Matrix entries may be JSON numbers or strings ("p/q", decimals).
RealMatrix load_real_matrix(const Json& j);
RationalMatrix load_rational_matrix(const Json& j);

Json real_matrix_to_json(const RealMatrix& m);
Json real_vector_to_json(const RealVector& v);

/// Integral rational matrices are written as JSON integers; anything that
/// does not fit or is non-integral becomes a "p/q" string.
Json rational_matrix_to_json(const RationalMatrix& m);

Json load_json_file(const std::string& path);

/// Repository fixture directory (golden matrices).
std::string data_path(const std::string& filename);

}  // namespace latred
