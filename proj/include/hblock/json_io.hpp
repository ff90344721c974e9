#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "hblock/block_matrix.hpp"
#include "hblock/check_report.hpp"
#include "hblock/decomposition.hpp"
#include "hblock/generators.hpp"
#include "hblock/matrix_kernel.hpp"

namespace hblock {

using Json = nlohmann::ordered_json;

// {"rows", "cols", "entries": [[re, im], ...]} row-major.
Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

// Matrix fields plus "block_dim" and "block_count".
Json block_matrix_to_json(const BlockMatrix& h);
BlockMatrix block_matrix_from_json(const Json& j);

// {"kind", "weight": "p/q", "target", "core", "factors", "defects"}. "core" is
// a single matrix when shared by all factors, otherwise an array with one
// matrix per factor.
Json certificate_to_json(const DecompositionCertificate& cert);
DecompositionCertificate certificate_from_json(const Json& j);

Json tolerance_to_json(const Tolerance& tol);
Json check_report_to_json(const CheckReport& report);
Json generator_spec_to_json(const GeneratorSpec& spec);

// Parse errors and schema violations surface as InputError.
Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);

}  // namespace hblock
