#pragma once

// JSON encoding of indices, classes and spaces.  Coefficients are always
// decimal strings.  Parsing failures throw Error(Schema).

#include <json.hpp>

#include "schubert/flag.hpp"
#include "schubert/grassmann.hpp"
#include "schubert/halving.hpp"
#include "schubert/indexing.hpp"
#include "schubert/schur.hpp"

namespace schubert {

using Json = nlohmann::ordered_json;

Json to_json(const Partition& lambda);
Json to_json(const OrderedSetPartition& osp);
Json to_json(const Permutation& w);
Json to_json(const Integer& n);
Json to_json(const Rational& q);
Json to_json(const SchurExpansion& e);
Json to_json(const GrassmannClass& a);
Json to_json(const FlagClass& a);
Json to_json(const HalvingClass& a);
Json to_json(const ComplexClass& a);
Json to_json(const SpaceDescriptor& space);

Partition partition_from_json(const Json& j);
OrderedSetPartition osp_from_json(const Json& j);
Permutation permutation_from_json(const Json& j);
/// Accepts a decimal string or a JSON integer.
Integer integer_from_json(const Json& j);
/// Accepts "p/q", a decimal string or a JSON integer.
Rational rational_from_json(const Json& j);
SpaceDescriptor space_from_json(const Json& j);

/// Short space syntax: gr:K:N, fl:D1,D2,..., rgr:K:N, rfl:..., hgr:K:N, hfl:..., ofl.
SpaceDescriptor parse_space(const std::string& text);

/// Reads a condition index for the given space: a partition (Grassmannians),
/// a one-line permutation (flag manifolds) or an OSP (any space).
OrderedSetPartition index_from_json(const Json& j, const SpaceDescriptor& space);

/// Block sizes of the index OSPs of a space.
std::vector<int> index_block_sizes(const SpaceDescriptor& space);

/// {"space": ..., "terms": [{"index": ..., "coeff": ...}]} on any space; indices
/// are read with index_from_json.
std::variant<GrassmannClass, FlagClass, HalvingClass> class_from_json(const Json& j);

}  // namespace schubert
