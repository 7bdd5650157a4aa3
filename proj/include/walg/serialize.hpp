#pragma once
#include <json.hpp>
#include <string>

#include "walg/bk_gens.hpp"
#include "walg/tensor_j.hpp"

namespace walg {

using Json = nlohmann::ordered_json;

Json to_json(const HbarPoly& c);
HbarPoly hbar_poly_from_json(const Json& j);

// {"N": int, "terms": [{"mono": [[i,j,exp],...], "coeff": ["num/den", ...]}]}
Json to_json(const AlgebraElement& a);
AlgebraElement algebra_from_json(const Json& j, OrderPtr o);

// {"N": int, "t": int, "terms": [{"mono": ..., "slots": [...], "coeff": ...}]}
Json to_json(const ModuleElement& m);
ModuleElement module_from_json(const Json& j, OrderPtr o);

Json to_json(const TGenerator& t);
Json to_json(const JMatrix& J);
JMatrix jmatrix_from_json(const Json& j, OrderPtr o);
Json to_json(const SemiclassicalJ& s);
Json to_json(const RMatrixElement& r);

std::string dump(const Json& j);  // two-space indent, trailing newline

}  // namespace walg
