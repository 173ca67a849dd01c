#pragma once

#include "torjump/glattice.hpp"
#include "torjump/jumps.hpp"
#include "torjump/weights.hpp"
#include "torjump/zeta.hpp"

#include <json.hpp>

#include <string>

namespace torjump {

// Tagged-union descriptor schema, e.g.
//   {"type":"induced","e":2,"f":3}
//   {"type":"quotient","sub":{...},"total":{...}}
//   {"type":"sum","parts":[{...},...]}
//   {"type":"base_change","inner":{...},"d0":5}
//   {"type":"nu1","r":2,"p":3}
//   {"type":"abelian","torus":{...}}
//   {"type":"profile","jumps":[{"value":"1/4","mult":1},...],
//    "profile":[{"fplus":2,"fzero":2,"fminus":1},...]}
nlohmann::json descriptor_to_json(const GroupDescriptor& g);
DescriptorPtr descriptor_from_json(const nlohmann::json& j);

nlohmann::json jump_multiset_to_json(const JumpMultiset& m);
nlohmann::json d_jump_multiset_to_json(const DJumpMultiset& m);

Rational rational_from_string(const std::string& s);

// Groups: {"mul":[[...]]} or {"points":n,"perm_generators":[[...],...]} or
// {"named":"c6"|"d4"|"q8"|"a4"|"c2xc2"|...}
GroupPtr group_from_json(const nlohmann::json& j);
// Lattices: {"named":"trivial","rank":1} | {"named":"regular"} |
// {"named":"coset","subgroup":i} | {"named":"augmentation"} |
// {"rank":r,"generators":[{"element":g,"matrix":[[...]]},...]}
GLattice lattice_from_json(GroupPtr group, const nlohmann::json& j);

nlohmann::json rational_series_to_json(const RationalSeries& s);

// Zeta configuration:
// {"variant":"torus"|"abelian","p":3,"delta":2,
//  "t":{"1":1,"2":2},"phi":{"1":1,"2":1},"seeds":{"1":1,"2":4},
//  "descriptor":{...}}
ZetaInput zeta_input_from_json(const nlohmann::json& j);

} // namespace torjump
