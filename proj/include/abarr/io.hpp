#pragma once

#include <json.hpp>
#include <string>

#include "abarr/affine.hpp"
#include "abarr/families.hpp"
#include "abarr/layers.hpp"
#include "abarr/ssolv.hpp"

namespace abarr::io {

using nlohmann::json;

// All documents carry "format": 1; readers reject other versions.

json poset_to_json(const FinitePoset& p);
FinitePoset poset_from_json(const json& j);

json arrangement_to_json(const Arrangement& a);
Arrangement arrangement_from_json(const json& j);

/// Poset document extended with the per-element layer data.
json layers_to_json(const LayerPoset& lp);

json certificate_to_json(const IdealChain& c);
IdealChain certificate_from_json(const json& j);

json affine_to_json(const AffineArrangement& a);
AffineArrangement affine_from_json(const json& j);

json graph_to_json(const SimpleGraph& g);      // vertices 1-based on disk
SimpleGraph graph_from_json(const json& j);

json group_to_json(const FiniteGroupTable& g);
FiniteGroupTable group_from_json(const json& j);

json sublattice_to_json(const LatticeBasis& b);
LatticeBasis sublattice_from_json(const json& j);

/// Hasse diagram in DOT, drawn bottom-up with one layer per rank.
std::string dot_hasse(const FinitePoset& p);

/// Human-readable fibration tower report.
std::string tower_text(const TowerReport& rep);

enum class InputKind { arrangement, poset, affine };
InputKind sniff(const json& j);

}  // namespace abarr::io
