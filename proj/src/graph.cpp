#include "flownet/graph.hpp"

#include <algorithm>

#include "flownet/error.hpp"

namespace flownet {

Graph::Graph(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  std::stable_sort(vertices_.begin(), vertices_.end());
  std::stable_sort(arrows_.begin(), arrows_.end(),
                   [](const Arrow& a, const Arrow& b) { return a.id < b.id; });
}

std::optional<std::size_t> Graph::vertex_index(std::string_view id) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id);
  if (it == vertices_.end() || *it != id) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::optional<std::size_t> Graph::arrow_index(std::string_view id) const {
  auto it = std::lower_bound(arrows_.begin(), arrows_.end(), id,
                             [](const Arrow& a, std::string_view key) { return a.id < key; });
  if (it == arrows_.end() || it->id != id) return std::nullopt;
  return static_cast<std::size_t>(it - arrows_.begin());
}

std::size_t Representation::dim(const std::string& vertex) const {
  auto it = vertex_dims.find(vertex);
  if (it == vertex_dims.end()) fail(ErrorCode::ValidationError, "no dimension for vertex '" + vertex + "'");
  return it->second;
}

const RatMatrix& Representation::map(const std::string& arrow) const {
  auto it = arrow_maps.find(arrow);
  if (it == arrow_maps.end()) fail(ErrorCode::ValidationError, "no matrix for arrow '" + arrow + "'");
  return it->second;
}

ValidationReport validate_network(const Network& n) {
  ValidationReport report;
  auto flag = [&](const std::string& id, std::string message) {
    report.violations.push_back({id, std::move(message)});
  };
  const Graph& g = n.graph;
  const Representation& f = n.representation;

  for (std::size_t i = 1; i < g.vertices().size(); ++i) {
    if (g.vertices()[i] == g.vertices()[i - 1]) flag(g.vertices()[i], "duplicate vertex id");
  }
  for (std::size_t i = 1; i < g.arrows().size(); ++i) {
    if (g.arrows()[i].id == g.arrows()[i - 1].id) flag(g.arrows()[i].id, "duplicate arrow id");
  }
  for (const auto& a : g.arrows()) {
    if (!g.has_vertex(a.source)) flag(a.id, "unknown source vertex '" + a.source + "'");
    if (!g.has_vertex(a.target)) flag(a.id, "unknown target vertex '" + a.target + "'");
  }
  for (const auto& e : n.external) {
    if (!g.has_vertex(e)) flag(e, "external vertex is not a vertex of the graph");
  }

  for (const auto& v : g.vertices()) {
    if (!f.vertex_dims.contains(v)) flag(v, "vertex has no dimension");
  }
  for (const auto& [v, dim] : f.vertex_dims) {
    if (!g.has_vertex(v)) flag(v, "dimension given for unknown vertex");
  }
  for (const auto& [a, m] : f.arrow_maps) {
    if (!g.has_arrow(a)) flag(a, "matrix given for unknown arrow");
  }
  for (const auto& a : g.arrows()) {
    auto it = f.arrow_maps.find(a.id);
    if (it == f.arrow_maps.end()) {
      flag(a.id, "arrow has no matrix");
      continue;
    }
    auto src = f.vertex_dims.find(a.source);
    auto tgt = f.vertex_dims.find(a.target);
    if (src == f.vertex_dims.end() || tgt == f.vertex_dims.end()) continue;
    const RatMatrix& m = it->second;
    if (m.rows() != tgt->second || m.cols() != src->second) {
      flag(a.id, "matrix has shape " + m.shape_string() + ", expected " +
                     std::to_string(tgt->second) + "x" + std::to_string(src->second));
    }
    if (f.ring == Ring::Z) {
      for (const auto& x : m.data()) {
        if (!is_integral(x)) {
          flag(a.id, "non-integral entry " + to_string(x) + " over Z");
          break;
        }
      }
    }
  }
  return report;
}

void require_valid(const Network& n) {
  const ValidationReport report = validate_network(n);
  if (!report.ok()) fail(ErrorCode::ValidationError, "invalid network: " + report.summary());
}

Representation constant_representation(const Graph& g, Ring ring, std::size_t rank) {
  Representation f;
  f.ring = ring;
  for (const auto& v : g.vertices()) f.vertex_dims[v] = rank;
  for (const auto& a : g.arrows()) f.arrow_maps[a.id] = RatMatrix::identity(rank);
  return f;
}

Network restrict_network(const Network& n, const std::set<std::string>& sub_vertices,
                         const std::set<std::string>& sub_arrows,
                         const std::set<std::string>& sub_external) {
  const Graph& g = n.graph;
  for (const auto& v : sub_vertices) {
    if (!g.has_vertex(v)) fail(ErrorCode::ClosureViolation, "vertex '" + v + "' is not in the network");
  }
  std::vector<Arrow> arrows;
  for (const auto& id : sub_arrows) {
    auto idx = g.arrow_index(id);
    if (!idx) fail(ErrorCode::ClosureViolation, "arrow '" + id + "' is not in the network");
    const Arrow& a = g.arrows()[*idx];
    if (!sub_vertices.contains(a.source) || !sub_vertices.contains(a.target)) {
      fail(ErrorCode::ClosureViolation, "arrow '" + id + "' has an endpoint outside the subgraph");
    }
    arrows.push_back(a);
  }
  for (const auto& e : sub_external) {
    if (!sub_vertices.contains(e)) {
      fail(ErrorCode::ClosureViolation, "external vertex '" + e + "' is outside the subgraph");
    }
  }

  Network out;
  out.graph = Graph({sub_vertices.begin(), sub_vertices.end()}, std::move(arrows));
  out.external = sub_external;
  out.representation.ring = n.representation.ring;
  for (const auto& v : sub_vertices) out.representation.vertex_dims[v] = n.representation.dim(v);
  for (const auto& a : sub_arrows) out.representation.arrow_maps[a] = n.representation.map(a);
  return out;
}

Representation mask_representation(const Network& n) {
  Representation out;
  const Representation& f = n.representation;
  out.ring = f.ring;
  for (const auto& [v, dim] : f.vertex_dims) out.vertex_dims[v] = n.external.contains(v) ? 0 : dim;
  for (const auto& a : n.graph.arrows()) {
    const RatMatrix& m = f.map(a.id);
    const bool zero_rows = n.external.contains(a.target);
    const bool zero_cols = n.external.contains(a.source);
    out.arrow_maps[a.id] =
        (zero_rows || zero_cols) ? RatMatrix(zero_rows ? 0 : m.rows(), zero_cols ? 0 : m.cols()) : m;
  }
  return out;
}

ChainLayout::ChainLayout(std::vector<std::pair<std::string, std::size_t>> sizes) {
  std::stable_sort(sizes.begin(), sizes.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [id, size] : sizes) {
    blocks_.push_back({std::move(id), total_, size});
    total_ += size;
  }
}

const Block* ChainLayout::find(std::string_view id) const {
  auto it = std::lower_bound(blocks_.begin(), blocks_.end(), id,
                             [](const Block& b, std::string_view key) { return b.id < key; });
  if (it == blocks_.end() || it->id != id) return nullptr;
  return &*it;
}

const Block& ChainLayout::at(std::string_view id) const {
  const Block* b = find(id);
  if (b == nullptr) fail(ErrorCode::LayoutMismatch, "no block '" + std::string(id) + "' in chain layout");
  return *b;
}

ChainLayout chain1_layout(const Graph& g, const Representation& f) {
  std::vector<std::pair<std::string, std::size_t>> sizes;
  for (const auto& a : g.arrows()) sizes.emplace_back(a.id, f.dim(a.source));
  return ChainLayout(std::move(sizes));
}

ChainLayout chain0_layout(const Graph& g, const Representation& f) {
  std::vector<std::pair<std::string, std::size_t>> sizes;
  for (const auto& v : g.vertices()) sizes.emplace_back(v, f.dim(v));
  return ChainLayout(std::move(sizes));
}

template <int Degree>
Chain<Degree> Chain<Degree>::from_blocks(const ChainLayout& layout,
                                         const std::map<std::string, RatVector>& blocks) {
  Chain out{layout, RatVector(layout.total(), Rational(0))};
  for (const auto& [id, values] : blocks) {
    const Block* b = layout.find(id);
    if (b == nullptr) fail(ErrorCode::LayoutMismatch, "chain references unknown id '" + id + "'");
    if (values.size() != b->size) {
      fail(ErrorCode::LayoutMismatch, "block '" + id + "' has length " + std::to_string(values.size()) +
                                          ", expected " + std::to_string(b->size));
    }
    std::copy(values.begin(), values.end(), out.coords.begin() + static_cast<std::ptrdiff_t>(b->offset));
  }
  return out;
}

template <int Degree>
std::map<std::string, RatVector> Chain<Degree>::to_blocks() const {
  std::map<std::string, RatVector> out;
  for (const auto& b : layout.blocks()) out[b.id] = block(b.id);
  return out;
}

template <int Degree>
RatVector Chain<Degree>::block(std::string_view id) const {
  const Block& b = layout.at(id);
  auto first = coords.begin() + static_cast<std::ptrdiff_t>(b.offset);
  return RatVector(first, first + static_cast<std::ptrdiff_t>(b.size));
}

template struct Chain<0>;
template struct Chain<1>;

}  // namespace flownet
