#pragma once

// JSON and CSV encodings. Rationals are always written as "p/q" strings.

#include <span>
#include <string>

#include <json.hpp>

#include "ech/capacities.hpp"
#include "ech/ellipsoid.hpp"
#include "ech/orbits.hpp"

namespace ech {

using Json = nlohmann::ordered_json;

// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
Json integer_to_json(const Integer& n);

// [{label, kind: "elliptic"|"hyperbolic", rotation: {value, tilt}?,
//   eigenvalue_sign: +1|-1?, action, multiplicity}, ...]
Json orbit_set_to_json(const OrbitSet& s);
// Throws ParseError on a malformed document; OrbitSet/ReebOrbit invariants
// are enforced as usual.
OrbitSet orbit_set_from_json(const Json& j);

// [{m1, m2, grading, action}, ...]
Json generators_to_json(std::span<const GeneratorRecord> records);
// header "m1,m2,grading,action"
std::string generators_to_csv(std::span<const GeneratorRecord> records);

// Records of every generator in the table, in grading order.
Json homology_to_json(const HomologyTable& table);
std::string homology_to_csv(const HomologyTable& table);

// {"a": "p/q", "b": "p/q", "values": ["p/q", ...]}
Json capacities_to_json(const CapacitySequence& seq);
// header "k,value"
std::string capacities_to_csv(const CapacitySequence& seq);

}  // namespace ech
