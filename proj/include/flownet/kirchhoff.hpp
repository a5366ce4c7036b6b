#pragma once

#include <set>
#include <string>
#include <vector>

#include "flownet/flow.hpp"
#include "flownet/graph.hpp"

namespace flownet {

/// Chains satisfying the first Kirchhoff law: d(f)_v = 0 for every vertex
/// outside E. For E empty this is flow_space.
FlowBasis kirchhoff1_space(const Network& n);

/// The network extended by a fresh vertex "*" of rank 0 and one arrow e -> *
/// per external vertex e. Its external set is {*}.
struct AttachedNetwork {
  Network network;
  std::string star;
  /// external vertex -> id of its attaching arrow
  std::map<std::string, std::string> attaching_arrows;
  /// Deletes the attaching-arrow blocks: extended 1-chains -> original 1-chains.
  RatMatrix projection;
};

AttachedNetwork attach_point(const Network& n);

/// Flow space of the attached network mapped back to the original 1-chains.
/// Checks that the projection is injective on flows, that every attaching
/// arrow carries exactly the original imbalance at its external vertex, and
/// that the image equals kirchhoff1_space; any failure raises
/// InternalTheoremViolation.
FlowBasis kirchhoff1_via_attachment(const Network& n);

/// Vertices with no outgoing arrow.
std::set<std::string> attractive_vertices(const Graph& g);

struct AttractiveReport {
  std::size_t masked_flow_dim = 0;
  std::size_t kirchhoff_dim = 0;
  bool equal = false;
};

/// Compares flows of F/F_E with Kirchhoff-1 chains of (Γ, E, F) when every
/// external vertex is attractive. Raises NotAttractive otherwise.
AttractiveReport kirchhoff1_attractive_check(const Network& n);

/// Symmetric form on 1-chains.
struct GramForm {
  RatMatrix gram;
};

// Square of size `layout.total()` and symmetric, else InputError.
void validate_gram(const GramForm& g, const ChainLayout& layout);

/// r_a * identity on the block of each arrow a.
GramForm gram_from_arrow_weights(const ChainLayout& layout, const std::map<std::string, Rational>& weights);

/// Stacked map f -> (B^T G f, d f) for a flow basis B.
RatMatrix eta_matrix(const Network& n, const GramForm& g);

bool eta_is_isomorphism(const Network& n, const GramForm& g);

/// The unique 1-chain with d f = phi that is G-orthogonal to every flow.
/// Raises ObstructionNonzero when phi is not a boundary and NotEuclidean when
/// the stacked system is singular.
Chain1 kirchhoff2_solve(const Network& n, const GramForm& g, const Chain0& phi);

}  // namespace flownet
