#pragma once

// JSON and DOT forms of the library's values. Keys keep insertion order so
// that identical inputs serialize to identical bytes.

#include "abels/building.hpp"
#include "abels/homology.hpp"

#include "json.hpp"

#include <optional>
#include <string>

namespace abels {

using Json = nlohmann::ordered_json;

/// {"p": 3, "dim": 2, "basis": [["1","0"],["1/3","1"]]}, one inner array per column.
Json to_json(const Lattice& l);
/// Inverse of to_json. Throws InvalidArgument on malformed input.
Lattice lattice_from_json(const Json& j);

/// Sorted blocks of sorted 1-based indices.
Json to_json(const Partition& partition);
Json to_json(const SignVector& s);
Json to_json(const RationalVector& v);

/// {"k": 1, "betti": 2, "torsion": ["2"]}
Json to_json(const DegreeHomology& h);
Json to_json(const std::vector<DegreeHomology>& hs);

/// {"model", "p", "dim", "vertices": [lattices], "simplices": {"1": [...], ...}}
Json to_json(const BuildingComplex& x);

/// Graphviz form of the 1-skeleton. Each node carries its retraction and,
/// when a height function is given, its height.
std::string to_dot(const BuildingComplex& x, const std::optional<HeightFunction>& h = std::nullopt);

}  // namespace abels
