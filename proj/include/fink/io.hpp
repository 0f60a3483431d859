#pragma once
// JSON forms of the library types, as used by the command-line tool.

#include <string_view>

#include "fink/blockspace.hpp"
#include "fink/canonize.hpp"
#include "fink/counting.hpp"
#include "fink/kvector.hpp"
#include "fink/staircase.hpp"
#include "json.hpp"

namespace fink {

using Json = nlohmann::ordered_json;

/// [1,0,2] style arrays. All parsers throw ParseError.
Json json_of(const LeKVector& s);
LeKVector vector_from_json(int k, const Json& j);
LeKVector parse_vector(int k, std::string_view text);

/// {"k":2,"terms":[[..],[..]]}
Json json_of(const BlockSequence& alpha);
BlockSequence block_sequence_from_json(const Json& j);

/// {"k":2,"I0":[1,2],"l0":{"2":1},"I1":[],"l1":{},"l2":-1}
Json json_of(const StaircaseValues& v);
StaircaseValues values_from_json(const Json& j);

/// {"k":1,"n":6,"classes":{"[1,0,1]":0,...}}. Keys may also be digit strings
/// such as "101" when k <= 9.
Json json_of(const PartitionOracle& oracle);
PartitionOracle partition_from_json(const Json& j);

Json json_of(const CanonizationResult& r);

/// A number when it fits in 64 bits, a decimal string otherwise.
Json json_of(const BigInt& x);

}  // namespace fink
