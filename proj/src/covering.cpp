#include "flownet/covering.hpp"

#include <algorithm>

#include "flownet/derived_colim.hpp"
#include "flownet/error.hpp"
#include "flownet/flow.hpp"
#include "flownet/kirchhoff.hpp"
#include "flownet/linalg.hpp"

namespace flownet {

namespace {

bool subset(const std::set<std::string>& a, const std::set<std::string>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

void check_locally_filtered(const Covering& c, ValidationReport& report, std::string_view kind,
                            const std::set<std::string> Piece::*items) {
  const auto& el = c.poset.elements();
  for (std::size_t a = 0; a < el.size(); ++a) {
    for (std::size_t b = a + 1; b < el.size(); ++b) {
      const auto& xi = c.pieces.at(el[a]).*items;
      const auto& xj = c.pieces.at(el[b]).*items;
      for (const auto& x : xi) {
        if (!xj.contains(x)) continue;
        const bool covered = std::any_of(el.begin(), el.end(), [&](const std::string& k) {
          return c.poset.leq(k, el[a]) && c.poset.leq(k, el[b]) && (c.pieces.at(k).*items).contains(x);
        });
        if (!covered) {
          report.add(x, std::string(kind) + " shared by pieces '" + el[a] + "' and '" + el[b] +
                            "' lies in no common lower piece");
        }
      }
    }
  }
}

// Extension by zero of 1-chains of `from` into 1-chains of `to`.
RatMatrix chain1_extension(const ChainLayout& from, const ChainLayout& to) {
  RatMatrix m(to.total(), from.total());
  for (const auto& b : from.blocks()) {
    const Block& tb = to.at(b.id);
    for (std::size_t i = 0; i < b.size; ++i) m(tb.offset + i, b.offset + i) = 1;
  }
  return m;
}

// Coordinates of the columns of `vectors` in the basis `basis`.
RatMatrix coordinates_in(const RatMatrix& basis, const RatMatrix& vectors) {
  RatMatrix out(basis.cols(), vectors.cols());
  for (std::size_t k = 0; k < vectors.cols(); ++k) {
    auto x = solve(basis, vectors.column(k));
    if (!x) fail(ErrorCode::InternalTheoremViolation, "extended chain lies outside the target flow module");
    for (std::size_t i = 0; i < x->size(); ++i) out(i, k) = (*x)[i];
  }
  return out;
}

void require_valid_covering(const Covering& c, const Network& n) {
  if (n.representation.ring != Ring::Q) fail(ErrorCode::InputError, "covering computations require coefficients in Q");
  const ValidationReport report = validate_covering(c, n);
  if (!report.ok()) fail(ErrorCode::ValidationError, "invalid covering: " + report.summary());
}

struct ObstructionPiece {
  ChainLayout chain0;
  RatMatrix projection;
  std::vector<std::size_t> complement;
};

ObstructionPiece obstruction_piece(const Network& piece) {
  const AttachedNetwork att = attach_point(piece);
  const FlowComplex fc = boundary_matrix(att.network.graph, att.network.representation);
  CokernelResult coker = cokernel_presentation(fc.d, Ring::Q);
  return ObstructionPiece{fc.chain0, std::move(*coker.projection), std::move(coker.complement)};
}

}  // namespace

ValidationReport validate_covering(const Covering& c, const Network& n) {
  ValidationReport report = validate_network(n);
  if (!report.ok()) return report;
  const Graph& g = n.graph;

  for (const auto& e : c.poset.elements()) {
    if (!c.pieces.contains(e)) report.add(e, "poset element has no piece");
  }
  for (const auto& [e, piece] : c.pieces) {
    if (!c.poset.contains(e)) report.add(e, "piece for an element outside the poset");
  }
  if (!report.ok()) return report;

  std::set<std::string> all_v, all_a, all_e;
  for (const auto& [id, piece] : c.pieces) {
    for (const auto& v : piece.vertices) {
      if (!g.has_vertex(v)) report.add(id, "unknown vertex '" + v + "'");
    }
    for (const auto& a : piece.arrows) {
      auto idx = g.arrow_index(a);
      if (!idx) {
        report.add(id, "unknown arrow '" + a + "'");
        continue;
      }
      const Arrow& arrow = g.arrows()[*idx];
      if (!piece.vertices.contains(arrow.source) || !piece.vertices.contains(arrow.target)) {
        report.add(id, "arrow '" + a + "' has an endpoint outside the piece");
      }
    }
    for (const auto& e : piece.external) {
      if (!piece.vertices.contains(e)) report.add(id, "external vertex '" + e + "' outside the piece");
      if (!n.external.contains(e)) report.add(id, "vertex '" + e + "' is external in the piece but not globally");
    }
    all_v.insert(piece.vertices.begin(), piece.vertices.end());
    all_a.insert(piece.arrows.begin(), piece.arrows.end());
    all_e.insert(piece.external.begin(), piece.external.end());
  }
  if (all_v != std::set<std::string>(g.vertices().begin(), g.vertices().end())) {
    report.add("", "pieces do not cover the vertices");
  }
  std::set<std::string> arrows;
  for (const auto& a : g.arrows()) arrows.insert(a.id);
  if (all_a != arrows) report.add("", "pieces do not cover the arrows");
  if (all_e != n.external) report.add("", "pieces do not cover the external vertices");

  for (const auto& i : c.poset.elements())
    for (const auto& j : c.poset.elements()) {
      if (!c.poset.less(i, j)) continue;
      const Piece& pi = c.pieces.at(i);
      const Piece& pj = c.pieces.at(j);
      if (!subset(pi.vertices, pj.vertices) || !subset(pi.arrows, pj.arrows) ||
          !subset(pi.external, pj.external)) {
        report.add(i + " <= " + j, "piece inclusion is not monotone");
      }
    }

  check_locally_filtered(c, report, "vertex", &Piece::vertices);
  check_locally_filtered(c, report, "arrow", &Piece::arrows);
  check_locally_filtered(c, report, "external vertex", &Piece::external);
  return report;
}

Network piece_network(const Covering& c, const Network& n, const std::string& element) {
  auto it = c.pieces.find(element);
  if (it == c.pieces.end()) fail(ErrorCode::InputError, "no piece for element '" + element + "'");
  return restrict_network(n, it->second.vertices, it->second.arrows, it->second.external);
}

CatFunctor induced_flow_functor(const Covering& c, const Network& n) {
  require_valid_covering(c, n);
  std::map<std::string, FlowBasis> flows;
  for (const auto& i : c.poset.elements()) flows.emplace(i, kirchhoff1_space(piece_network(c, n, i)));

  CatFunctor out;
  for (const auto& [i, b] : flows) out.object_dims[i] = b.dim();
  for (const auto& i : c.poset.elements())
    for (const auto& j : c.poset.elements()) {
      if (!c.poset.less(i, j)) continue;
      const FlowBasis& bi = flows.at(i);
      const FlowBasis& bj = flows.at(j);
      out.morphism_maps[poset_morphism_id(i, j)] =
          coordinates_in(bj.basis, chain1_extension(bi.layout, bj.layout) * bi.basis);
    }
  return out;
}

CatFunctor induced_obstruction_functor(const Covering& c, const Network& n) {
  require_valid_covering(c, n);
  std::map<std::string, Network> nets;
  std::map<std::string, ObstructionPiece> pieces;
  for (const auto& i : c.poset.elements()) {
    nets.emplace(i, piece_network(c, n, i));
    pieces.emplace(i, obstruction_piece(nets.at(i)));
  }

  CatFunctor out;
  for (const auto& [i, p] : pieces) out.object_dims[i] = p.complement.size();
  for (const auto& i : c.poset.elements())
    for (const auto& j : c.poset.elements()) {
      if (!c.poset.less(i, j)) continue;
      const ObstructionPiece& pi = pieces.at(i);
      const ObstructionPiece& pj = pieces.at(j);
      RatMatrix m(pj.complement.size(), pi.complement.size());
      for (std::size_t k = 0; k < pi.complement.size(); ++k) {
        // The class of a unit 0-chain of piece i, pushed into piece j.
        RatVector unit(pj.chain0.total(), Rational(0));
        const std::size_t coord = pi.complement[k];
        for (const auto& v : nets.at(i).graph.vertices()) {
          const Block& from = pi.chain0.at(v);
          if (coord >= from.offset && coord < from.offset + from.size) {
            unit[pj.chain0.at(v).offset + (coord - from.offset)] = 1;
          }
        }
        const RatVector image = pj.projection * unit;
        for (std::size_t r = 0; r < image.size(); ++r) m(r, k) = image[r];
      }
      out.morphism_maps[poset_morphism_id(i, j)] = std::move(m);
    }
  return out;
}

long MvReport::euler_characteristic() const {
  return static_cast<long>(colim2_obstruction) - static_cast<long>(colim0_flow) +
         static_cast<long>(global_flow) - static_cast<long>(colim1_obstruction);
}

MvReport mv_verify(const Covering& c, const Network& n) {
  require_valid_covering(c, n);
  const FinCategory index = poset_category(c.poset);
  const CatFunctor flow_functor = induced_flow_functor(c, n);
  const CatFunctor obstruction_functor = induced_obstruction_functor(c, n);
  const NormalizedComplex flow_complex = normalized_complex(index, flow_functor);
  const NormalizedComplex obstruction_complex = normalized_complex(index, obstruction_functor);

  auto homology = [](const NormalizedComplex& cx, std::size_t deg) {
    return homology_at(cx.boundary(deg + 1), cx.boundary(deg), Ring::Q).free_rank;
  };

  MvReport report;
  report.colim0_flow = homology(flow_complex, 0);
  report.colim1_obstruction = homology(obstruction_complex, 1);
  report.colim2_obstruction = homology(obstruction_complex, 2);

  const FlowBasis global = kirchhoff1_space(n);
  report.global_flow = global.dim();

  // μ on C_0 = ⊕_i Φ_i, then checked to vanish on the image of d_1.
  RatMatrix mu(global.dim(), flow_complex.rank(0));
  for (const auto& chain : flow_complex.chains(0)) {
    const FlowBasis piece = kirchhoff1_space(piece_network(c, n, chain.source));
    const RatMatrix coords = coordinates_in(global.basis, chain1_extension(piece.layout, global.layout) * piece.basis);
    for (std::size_t r = 0; r < coords.rows(); ++r)
      for (std::size_t k = 0; k < coords.cols(); ++k) mu(r, chain.offset + k) = coords(r, k);
  }
  if (!(mu * flow_complex.boundary(1)).is_zero()) {
    fail(ErrorCode::InternalTheoremViolation, "extension by zero does not factor through colim");
  }
  const std::size_t mu_rank = rank(mu);
  report.ker_mu = report.colim0_flow - mu_rank;
  report.coker_mu = report.global_flow - mu_rank;
  report.left_exact = report.ker_mu == report.colim2_obstruction;
  report.right_exact = report.coker_mu == report.colim1_obstruction;
  report.pass = report.left_exact && report.right_exact;
  return report;
}

}  // namespace flownet
