#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "localh/constructions.hpp"
#include "localh/cwbary.hpp"
#include "localh/identities.hpp"
#include "localh/polynomial.hpp"
#include "localh/simplicial.hpp"
#include "localh/subdivision.hpp"

/// JSON interchange. Every document may carry "format": "localh/1"; any other
/// value, and any key not listed for the document, is a Schema error naming
/// the offending path.
namespace localh::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kFormat = "localh/1";

enum class FileKind { Complex, Subdivision, Poset, OpWord };

/// Subdivision: {"base": complex, "total": complex, "carrier": {...}}.
/// Poset: has "elements". OpWord: has "steps". Complex: {"facets": [...]}.
FileKind detect(const Json& j);

Json read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const Json& j);

/// Exact integers: JSON numbers when they fit in 64 bits, decimal strings otherwise.
Json to_json(const Integer& n);
Integer integer_from_json(const Json& j, const std::string& path = "$");

/// Ascending coefficients, trimmed; zero is [0].
Json to_json(const Polynomial& p);
/// Ascending coefficients padded to the given length.
Json to_json(const Polynomial& p, std::size_t length);
Polynomial polynomial_from_json(const Json& j, const std::string& path = "$");

Json to_json(const GammaVector& g);
Json to_json(const FVector& f);

Json to_json(const SimplicialComplex& k);
SimplicialComplex complex_from_json(const Json& j, const std::string& path = "$");

Json to_json(const Subdivision& s);
Subdivision subdivision_from_json(const Json& j);

Json to_json(const FacePoset& p);
FacePoset poset_from_json(const Json& j);

Json to_json(const OpWord& w);
OpWord opword_from_json(const Json& j);

Json to_json(const ValidityReport& r);
Json to_json(const PredicateResult& r);
Json to_json(const IdentityReport& r);
Json to_json(const AbPolynomial& p);
Json to_json(const CdResult& r);

}  // namespace localh::io
