#pragma once

#include <json.hpp>

#include "flownet/category.hpp"
#include "flownet/covering.hpp"
#include "flownet/graph.hpp"
#include "flownet/kirchhoff.hpp"
#include "flownet/linalg.hpp"

namespace flownet::io {

using Json = nlohmann::json;

/// Integers or "p/q" strings. Malformed values raise InputError.
Rational rational_from_json(const Json& j);
/// Always a string in lowest terms.
Json to_json(const Rational& x);
Json to_json(const RatVector& v);
/// Array of rows. Zero-row matrices serialize as [].
Json to_json(const RatMatrix& m);
/// Rows as arrays; `cols_if_empty` fixes the width of [].
RatMatrix matrix_from_json(const Json& j, std::size_t cols_if_empty = 0);

Json to_json(const QuotientPresentation& p, Ring ring);
Ring ring_from_string(std::string_view s);

/// {"vertices": [{"id","dim"}], "arrows": [{"id","source","target","matrix"}],
///  "external": [...], "ring": "Q"|"Z"}. Structure only; call validate_network.
Network network_from_json(const Json& j);
Json to_json(const Network& n);

/// Map id -> vector; missing ids are zero blocks.
std::map<std::string, RatVector> blocks_from_json(const Json& j);
Json blocks_to_json(const std::map<std::string, RatVector>& blocks);
template <int Degree>
Json to_json(const Chain<Degree>& c) {
  return blocks_to_json(c.to_blocks());
}
Json to_json(const ChainLayout& layout);

/// {"gram": [[...]]} or {"diagonal": [...]} (one weight per arrow in id
/// order) or {"diagonal": {"arrow": w}}.
GramForm gram_from_json(const Json& j, const ChainLayout& chain1);

/// Full form {"objects","morphisms","compositions"} or the poset shorthand
/// {"elements","leq"}. A composition entry {"after": f, "then": g, "equals": h}
/// means h = g o f.
FinCategory category_from_json(const Json& j);
/// "objects": [{"id","dim"}] and "morphisms": [{"id","matrix"}], or
/// {"constant": n} for the constant functor.
CatFunctor functor_from_json(const Json& j, const FinCategory& c, Ring ring);

Poset poset_from_json(const Json& j);
/// {"poset": {"elements","leq"}, "pieces": {id: {"vertices","arrows","external"}}}.
Covering covering_from_json(const Json& j);
Json to_json(const Covering& c);

Json to_json(const MvReport& r);

}  // namespace flownet::io
