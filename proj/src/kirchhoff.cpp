#include "flownet/kirchhoff.hpp"

#include "flownet/error.hpp"
#include "flownet/linalg.hpp"

namespace flownet {

namespace {

RatMatrix kernel_in_ring(const RatMatrix& m, Ring ring) {
  if (ring == Ring::Z) return to_rational_matrix(integer_kernel_basis(to_integer_matrix(m)));
  return kernel_basis(m);
}

std::string fresh_id(const std::string& base, const auto& taken) {
  if (!taken(base)) return base;
  for (std::size_t k = 1;; ++k) {
    std::string candidate = base + "_" + std::to_string(k);
    if (!taken(candidate)) return candidate;
  }
}

void require_rational(const Network& n, std::string_view what) {
  if (n.representation.ring != Ring::Q) {
    fail(ErrorCode::InputError, std::string(what) + " requires coefficients in Q");
  }
}

}  // namespace

FlowBasis kirchhoff1_space(const Network& n) {
  require_valid(n);
  const FlowComplex c = boundary_matrix(n.graph, n.representation);
  std::vector<std::size_t> internal_rows;
  for (const auto& b : c.chain0.blocks()) {
    if (n.external.contains(b.id)) continue;
    for (std::size_t i = 0; i < b.size; ++i) internal_rows.push_back(b.offset + i);
  }
  return FlowBasis{kernel_in_ring(c.d.select_rows(internal_rows), n.representation.ring), c.chain1};
}

AttachedNetwork attach_point(const Network& n) {
  require_valid(n);
  const Graph& g = n.graph;
  AttachedNetwork out;
  out.star = fresh_id("*", [&](const std::string& id) { return g.has_vertex(id); });

  std::vector<std::string> vertices = g.vertices();
  vertices.push_back(out.star);
  std::vector<Arrow> arrows = g.arrows();
  std::set<std::string> arrow_ids;
  for (const auto& a : arrows) arrow_ids.insert(a.id);

  Representation rep = n.representation;
  rep.vertex_dims[out.star] = 0;
  for (const auto& e : n.external) {
    const std::string id = fresh_id(out.star + ":" + e, [&](const std::string& s) { return arrow_ids.contains(s); });
    arrow_ids.insert(id);
    arrows.push_back({id, e, out.star});
    rep.arrow_maps[id] = RatMatrix(0, rep.dim(e));
    out.attaching_arrows[e] = id;
  }
  out.network.graph = Graph(std::move(vertices), std::move(arrows));
  out.network.external = {out.star};
  out.network.representation = std::move(rep);

  const ChainLayout original = chain1_layout(g, n.representation);
  const ChainLayout extended = chain1_layout(out.network.graph, out.network.representation);
  out.projection = RatMatrix(original.total(), extended.total());
  for (const auto& b : original.blocks()) {
    const Block& eb = extended.at(b.id);
    for (std::size_t i = 0; i < b.size; ++i) out.projection(b.offset + i, eb.offset + i) = 1;
  }
  return out;
}

FlowBasis kirchhoff1_via_attachment(const Network& n) {
  const AttachedNetwork att = attach_point(n);
  const FlowBasis extended = flow_space(att.network.graph, att.network.representation);
  const RatMatrix projected = att.projection * extended.basis;
  if (rank(projected) != extended.dim()) {
    fail(ErrorCode::InternalTheoremViolation, "projection of attached flows is not injective");
  }

  // The value on each attaching arrow is forced by the balance at its vertex.
  const FlowComplex original = boundary_matrix(n.graph, n.representation);
  const RatMatrix imbalance = original.d * projected;
  for (const auto& [e, arrow] : att.attaching_arrows) {
    const Block& vb = original.chain0.at(e);
    const Block& ab = extended.layout.at(arrow);
    for (std::size_t col = 0; col < extended.dim(); ++col)
      for (std::size_t i = 0; i < vb.size; ++i)
        if (extended.basis(ab.offset + i, col) != imbalance(vb.offset + i, col)) {
          fail(ErrorCode::InternalTheoremViolation,
               "attaching arrow '" + arrow + "' does not carry the imbalance at '" + e + "'");
        }
  }

  FlowBasis direct = kirchhoff1_space(n);
  if (!same_column_span(projected, direct.basis)) {
    fail(ErrorCode::InternalTheoremViolation,
         "attached flows and Kirchhoff-1 chains span different subspaces");
  }
  return FlowBasis{projected, original.chain1};
}

std::set<std::string> attractive_vertices(const Graph& g) {
  std::set<std::string> out(g.vertices().begin(), g.vertices().end());
  for (const auto& a : g.arrows()) out.erase(a.source);
  return out;
}

AttractiveReport kirchhoff1_attractive_check(const Network& n) {
  require_valid(n);
  const std::set<std::string> attractive = attractive_vertices(n.graph);
  std::string offending;
  for (const auto& e : n.external) {
    if (!attractive.contains(e)) offending += (offending.empty() ? "" : ", ") + e;
  }
  if (!offending.empty()) fail(ErrorCode::NotAttractive, "external vertices with outgoing arrows: " + offending);

  const FlowBasis masked = flow_space(n.graph, mask_representation(n));
  const FlowBasis direct = kirchhoff1_space(n);
  AttractiveReport report;
  report.masked_flow_dim = masked.dim();
  report.kirchhoff_dim = direct.dim();
  report.equal = masked.layout == direct.layout && masked.dim() == direct.dim() &&
                 same_column_span(masked.basis, direct.basis);
  return report;
}

void validate_gram(const GramForm& g, const ChainLayout& layout) {
  const RatMatrix& m = g.gram;
  if (m.rows() != layout.total() || m.cols() != layout.total()) {
    fail(ErrorCode::InputError, "Gram matrix has shape " + m.shape_string() + ", expected " +
                                    std::to_string(layout.total()) + "x" + std::to_string(layout.total()));
  }
  if (!(m == m.transpose())) fail(ErrorCode::InputError, "Gram matrix is not symmetric");
}

GramForm gram_from_arrow_weights(const ChainLayout& layout, const std::map<std::string, Rational>& weights) {
  GramForm g{RatMatrix(layout.total(), layout.total())};
  for (const auto& [id, w] : weights) {
    if (layout.find(id) == nullptr) fail(ErrorCode::InputError, "weight given for unknown arrow '" + id + "'");
  }
  for (const auto& b : layout.blocks()) {
    auto it = weights.find(b.id);
    if (it == weights.end()) fail(ErrorCode::InputError, "no weight for arrow '" + b.id + "'");
    for (std::size_t i = 0; i < b.size; ++i) g.gram(b.offset + i, b.offset + i) = it->second;
  }
  return g;
}

RatMatrix eta_matrix(const Network& n, const GramForm& g) {
  require_valid(n);
  require_rational(n, "the second Kirchhoff law");
  const FlowComplex c = boundary_matrix(n.graph, n.representation);
  validate_gram(g, c.chain1);
  const RatMatrix flows = kernel_basis(c.d);
  return vstack(flows.transpose() * g.gram, c.d);
}

bool eta_is_isomorphism(const Network& n, const GramForm& g) {
  const RatMatrix eta = eta_matrix(n, g);
  return rank(eta) == eta.cols();
}

Chain1 kirchhoff2_solve(const Network& n, const GramForm& g, const Chain0& phi) {
  require_valid(n);
  require_rational(n, "the second Kirchhoff law");
  const FlowComplex c = boundary_matrix(n.graph, n.representation);
  validate_gram(g, c.chain1);
  if (!(phi.layout == c.chain0)) fail(ErrorCode::LayoutMismatch, "0-chain layout does not match the network");

  if (!epsilon_vanishes(n.graph, n.representation, phi).vanishes) {
    fail(ErrorCode::ObstructionNonzero, "epsilon(phi) != 0: the potential is not a boundary");
  }
  const RatMatrix flows = kernel_basis(c.d);
  const RatMatrix eta = vstack(flows.transpose() * g.gram, c.d);
  if (rank(eta) != eta.cols()) {
    fail(ErrorCode::NotEuclidean, "the map g -> (<g,-> on flows, dg) is not injective");
  }
  RatVector rhs(flows.cols(), Rational(0));
  rhs.insert(rhs.end(), phi.coords.begin(), phi.coords.end());
  auto f = solve(eta, rhs);
  if (!f) fail(ErrorCode::InternalTheoremViolation, "stacked system has no solution for an admissible potential");
  return Chain1{c.chain1, std::move(*f)};
}

}  // namespace flownet
