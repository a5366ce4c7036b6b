#pragma once

// Small constructors for hand-written test networks.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "flownet/graph.hpp"

namespace flownet::testing {

struct ArrowSpec {
  std::string id;
  std::string source;
  std::string target;
  RatMatrix matrix;
};

inline Network make_network(const std::map<std::string, std::size_t>& dims, const std::vector<ArrowSpec>& arrows,
                            std::set<std::string> external = {}, Ring ring = Ring::Q) {
  Network n;
  std::vector<std::string> vertices;
  for (const auto& [v, d] : dims) vertices.push_back(v);
  std::vector<Arrow> as;
  for (const auto& a : arrows) {
    as.push_back({a.id, a.source, a.target});
    n.representation.arrow_maps[a.id] = a.matrix;
  }
  n.graph = Graph(vertices, as);
  n.representation.ring = ring;
  n.representation.vertex_dims = dims;
  n.external = std::move(external);
  return n;
}

inline RatMatrix scalar(long x) { return RatMatrix::from_rows({{Rational(x)}}); }

// Rank-one identity representation on the given arrows (id, source, target).
inline Network incidence_network(const std::vector<std::string>& vertices, const std::vector<Arrow>& arrows,
                                 std::set<std::string> external = {}) {
  std::map<std::string, std::size_t> dims;
  for (const auto& v : vertices) dims[v] = 1;
  std::vector<ArrowSpec> specs;
  for (const auto& a : arrows) specs.push_back({a.id, a.source, a.target, scalar(1)});
  return make_network(dims, specs, std::move(external));
}

// Two vertices joined by two parallel arrows r1, r2 from "in" to "out".
inline Network current_divider() {
  return incidence_network({"in", "out"}, {{"r1", "in", "out"}, {"r2", "in", "out"}});
}

inline Network loop_network(long factor, Ring ring = Ring::Q) {
  return make_network({{"v", 1}}, {{"g", "v", "v", scalar(factor)}}, {}, ring);
}

}  // namespace flownet::testing
