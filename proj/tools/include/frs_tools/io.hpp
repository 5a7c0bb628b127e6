#pragma once

// JSON encodings. Group elements are coordinate arrays, cyclotomic numbers
// are {"modulus", "coefficients"} in the power basis with rational strings.

#include <json.hpp>

#include <string>

#include "frs/liealg.hpp"
#include "frs/matrixmodel.hpp"
#include "frs/rootsystem.hpp"

namespace frs::io {

using json = nlohmann::ordered_json;

inline constexpr const char* system_schema = "frs-1";

json to_json(const GroupElement& g);
json to_json(const std::vector<GroupElement>& gs);
json to_json(const CyclotomicNumber& x);
json to_json(const IntMatrix& m);
json to_json(const ExactMatrix& m);

/// {"schema":"frs-1","orders":[...],"beta":[[...]],"roots":[[...]]}
json system_document(const RootSystem& system);
/// Throws InputError, InvalidBicharacter, InvalidElement.
RootSystem parse_system(const json& doc);
/// Throws InputError on unreadable files or malformed JSON.
RootSystem read_system_file(const std::string& path);

/// Nonzero constants c(a, b) with a < b.
json bracket_document(const GradedLieAlgebra& algebra);
/// Labelled basis matrices and scalars of a model.
json model_document(const MatrixModel& model);

}  // namespace frs::io
