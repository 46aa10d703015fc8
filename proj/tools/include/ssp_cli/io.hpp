#pragma once

// JSON input formats of the command-line tool.
//
// Module:         {p, s, n, rank, F, V, E?, action?: {alpha, matrix}}
// Coset space:    {points, generators: [{name, perm}], group?}
// Representation: {dim, field: {p, s}, generators: [matrix, ...]}
//
// Matrices are row-major arrays; an entry is an integer or an array of
// integer coefficients, low degree first.

#include <string>

#include "json.hpp"
#include "ssp/count.hpp"
#include "ssp/dieudonne.hpp"
#include "ssp/errors.hpp"

namespace ssp::cli {

using Json = nlohmann::ordered_json;

/// Thrown for malformed input documents.
struct InputError : ssp::ValidationError {
  using ssp::ValidationError::ValidationError;
};

Json read_json_file(const std::string& path);

DieudonneModule module_from_json(const Json& doc);
Json module_to_json(const DieudonneModule& m);

CosetSpace coset_space_from_json(const Json& doc);
Json coset_space_to_json(const CosetSpace& space);

Representation representation_from_json(const Json& doc);
Json representation_to_json(const Representation& rho);

Json fq_to_json(const FqElem& x);
Json fmatrix_to_json(const FMatrix& m);

}  // namespace ssp::cli
