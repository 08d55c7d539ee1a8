#pragma once

#include <string>
#include <utility>
#include <vector>

#include "spine/json_io.hpp"
#include "spine/semilattice.hpp"

namespace spine {

// Covering relation of x ≤ y ⇔ x ∨ y = y: pairs (x, y) with x < y and
// nothing strictly between. Edges are sorted, nodes keep their ids.
struct HasseDiagram {
  std::vector<std::string> labels;
  std::vector<std::pair<ElementId, ElementId>> edges;  // (lower, upper)
};

HasseDiagram hasse_diagram(FiniteSemilattice const& s);

// digraph with one node per element, edges pointing upwards.
std::string to_dot(HasseDiagram const& h);

// {"nodes":[{"id":0,"label":"ap","covers":[1]}], "edges":[[0,1]]}; covers
// lists the upper covers of the node.
Json to_json(HasseDiagram const& h);

}  // namespace spine
