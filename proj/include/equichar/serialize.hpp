#pragma once

#include <json.hpp>

#include "equichar/bisymfunc.hpp"

namespace equichar {

// Key order is preserved so that serialized output is byte-stable.
using Json = nlohmann::ordered_json;

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

// {"0":"1","1":"-3/2"}, ascending exponents.
Json to_json(const QPoly& p);
QPoly qpoly_from_json(const Json& j);

// {"basis":"schur","degree":7,"terms":[{"part":[7],"coeff":{...}}, ...]}
// Terms are listed by size, then ascending under the partition order.
Json to_json(const SymFunc& f);
SymFunc symfunc_from_json(const Json& j);

// {"basis":..., "bidegree":[k,n-k], "terms":[{"x":[1],"y":[4],"coeff":{...}}, ...]}
Json to_json(const BiSymFunc& f);
BiSymFunc bisymfunc_from_json(const Json& j);

}  // namespace equichar
