#pragma once

// JSON views of the library's values (nlohmann::json).

#include "json.hpp"

#include "negacode/analysis.hpp"
#include "negacode/bch.hpp"
#include "negacode/code.hpp"
#include "negacode/cosets.hpp"
#include "negacode/field.hpp"
#include "negacode/mds.hpp"
#include "negacode/poly.hpp"
#include "negacode/verify.hpp"

namespace negacode {

using Json = nlohmann::ordered_json;

Json to_json(const FiniteField& field);
/// Ascending coefficient list.
Json to_json(const Poly& f);
Json to_json(const CosetSystem& system);
/// {q, n, k, generator, defining_set, reversible, lcd, hull_dim}.
Json to_json(const NegacyclicCode& code);
Json to_json(const DimFormulaResult& r);
Json to_json(const DistanceResult& r);
Json to_json(const MdsSpec& spec, const Applicability& check);

Json to_json(const VerifyReport& report);

Json error_json(const Error& e);

}  // namespace negacode
