#include "spine/hasse.hpp"

namespace spine {

HasseDiagram hasse_diagram(FiniteSemilattice const& s) {
  HasseDiagram h;
  auto n = static_cast<ElementId>(s.size());
  for (ElementId x = 0; x < n; ++x) h.labels.push_back(s.label(x));
  auto lt = [&](ElementId x, ElementId y) { return x != y && leq(s, x, y); };
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      if (!lt(x, y)) continue;
      bool covered = true;
      for (ElementId z = 0; z < n && covered; ++z) covered = !(lt(x, z) && lt(z, y));
      if (covered) h.edges.emplace_back(x, y);
    }
  }
  return h;
}

namespace {

std::string quoted(std::string const& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(HasseDiagram const& h) {
  std::string out = "digraph hasse {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < h.labels.size(); ++i) {
    out += "  n" + std::to_string(i) + " [label=" + quoted(h.labels[i]) + "];\n";
  }
  for (auto const& [x, y] : h.edges) {
    out += "  n" + std::to_string(x) + " -> n" + std::to_string(y) + ";\n";
  }
  return out + "}\n";
}

Json to_json(HasseDiagram const& h) {
  Json nodes = Json::array();
  for (std::size_t i = 0; i < h.labels.size(); ++i) {
    Json covers = Json::array();
    for (auto const& [x, y] : h.edges) {
      if (x == i) covers.push_back(y);
    }
    nodes.push_back({{"id", i}, {"label", h.labels[i]}, {"covers", covers}});
  }
  Json edges = Json::array();
  for (auto const& [x, y] : h.edges) edges.push_back({x, y});
  return {{"nodes", nodes}, {"edges", edges}};
}

}  // namespace spine
