#pragma once

#include <optional>

#include "flownet/graph.hpp"
#include "flownet/linalg.hpp"

namespace flownet {

/// The boundary d: 1-chains -> 0-chains,
///   d(f)_v = sum_{t(a)=v} F(a) f_a - sum_{s(a)=v} f_a.
/// For a loop both terms land in the same block.
struct FlowComplex {
  RatMatrix d;
  ChainLayout chain1;
  ChainLayout chain0;
};

/// Columns are 1-chains spanning the flow module ker d (over Q), or a lattice
/// basis of it when the representation is over Z.
struct FlowBasis {
  RatMatrix basis;
  ChainLayout layout;

  std::size_t dim() const { return basis.cols(); }
};

FlowComplex boundary_matrix(const Graph& g, const Representation& f);

FlowBasis flow_space(const Graph& g, const Representation& f);

struct ObstructionModule {
  QuotientPresentation presentation;
  /// Over Q: epsilon as a matrix from 0-chain coordinates onto coker d.
  std::optional<RatMatrix> epsilon;
  ChainLayout chain0;
};

ObstructionModule obstruction_module(const Graph& g, const Representation& f, Ring ring);

struct FlowCheck {
  bool ok = false;
  Chain0 residual;
};

FlowCheck is_flow(const Graph& g, const Representation& f, const Chain1& chain);

struct EpsilonCheck {
  bool vanishes = false;
  std::optional<Chain1> witness;
};

/// phi lies in im d; the witness is the particular solution of d f = phi with
/// free variables zeroed.
EpsilonCheck epsilon_vanishes(const Graph& g, const Representation& f, const Chain0& phi);

}  // namespace flownet
