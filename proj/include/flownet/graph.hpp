#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "flownet/matrix.hpp"
#include "flownet/rational.hpp"
#include "flownet/report.hpp"

namespace flownet {

struct Arrow {
  std::string id;
  std::string source;
  std::string target;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Directed multigraph. Vertices and arrows are kept sorted by id; loops and
/// parallel arrows are allowed. Duplicate or dangling ids are representable
/// so that validate_network can report them.
class Graph {
 public:
  Graph() = default;
  Graph(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }

  std::optional<std::size_t> vertex_index(std::string_view id) const;
  std::optional<std::size_t> arrow_index(std::string_view id) const;
  bool has_vertex(std::string_view id) const { return vertex_index(id).has_value(); }
  bool has_arrow(std::string_view id) const { return arrow_index(id).has_value(); }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

/// Free modules F(v) = R^dim and arrow maps F(a): F(s(a)) -> F(t(a)) stored
/// as dim(t) x dim(s) matrices.
struct Representation {
  Ring ring = Ring::Q;
  std::map<std::string, std::size_t> vertex_dims;
  std::map<std::string, RatMatrix> arrow_maps;

  std::size_t dim(const std::string& vertex) const;
  const RatMatrix& map(const std::string& arrow) const;

  friend bool operator==(const Representation&, const Representation&) = default;
};

struct Network {
  Graph graph;
  std::set<std::string> external;
  Representation representation;

  friend bool operator==(const Network&, const Network&) = default;
};

ValidationReport validate_network(const Network& n);

// Throws ValidationError carrying the report summary.
void require_valid(const Network& n);

Representation constant_representation(const Graph& g, Ring ring, std::size_t rank);

/// Subnetwork on the given ids, with F restricted. Raises ClosureViolation
/// when an arrow endpoint or external vertex is missing from sub_vertices, or
/// when an id is not part of the network.
Network restrict_network(const Network& n, const std::set<std::string>& sub_vertices,
                         const std::set<std::string>& sub_arrows,
                         const std::set<std::string>& sub_external);

/// F / F_E for free modules: rank zero at external vertices, arrow maps cut
/// down to the surviving rows and columns.
Representation mask_representation(const Network& n);

// Block layout of a chain space. Blocks are ordered by id.
struct Block {
  std::string id;
  std::size_t offset = 0;
  std::size_t size = 0;

  friend bool operator==(const Block&, const Block&) = default;
};

class ChainLayout {
 public:
  ChainLayout() = default;
  explicit ChainLayout(std::vector<std::pair<std::string, std::size_t>> sizes);

  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  std::size_t total() const noexcept { return total_; }
  const Block* find(std::string_view id) const;
  const Block& at(std::string_view id) const;

  friend bool operator==(const ChainLayout&, const ChainLayout&) = default;

 private:
  std::vector<Block> blocks_;
  std::size_t total_ = 0;
};

/// 1-chains: one block of dim F(s(a)) per arrow.
ChainLayout chain1_layout(const Graph& g, const Representation& f);
/// 0-chains: one block of dim F(v) per vertex.
ChainLayout chain0_layout(const Graph& g, const Representation& f);

template <int Degree>
struct Chain {
  ChainLayout layout;
  RatVector coords;

  // Missing ids are zero blocks; unknown ids or wrong block lengths raise
  // LayoutMismatch.
  static Chain from_blocks(const ChainLayout& layout, const std::map<std::string, RatVector>& blocks);
  std::map<std::string, RatVector> to_blocks() const;
  RatVector block(std::string_view id) const;
};

using Chain0 = Chain<0>;
using Chain1 = Chain<1>;

extern template struct Chain<0>;
extern template struct Chain<1>;

}  // namespace flownet
