#include "flownet/flow.hpp"

#include "flownet/error.hpp"

namespace flownet {

FlowComplex boundary_matrix(const Graph& g, const Representation& f) {
  FlowComplex out{RatMatrix(), chain1_layout(g, f), chain0_layout(g, f)};
  out.d = RatMatrix(out.chain0.total(), out.chain1.total());
  for (const auto& a : g.arrows()) {
    const Block& col = out.chain1.at(a.id);
    const Block& src = out.chain0.at(a.source);
    const Block& tgt = out.chain0.at(a.target);
    const RatMatrix& m = f.map(a.id);
    for (std::size_t i = 0; i < tgt.size; ++i)
      for (std::size_t j = 0; j < col.size; ++j) out.d(tgt.offset + i, col.offset + j) += m(i, j);
    for (std::size_t j = 0; j < col.size; ++j) out.d(src.offset + j, col.offset + j) -= 1;
  }
  return out;
}

FlowBasis flow_space(const Graph& g, const Representation& f) {
  FlowComplex c = boundary_matrix(g, f);
  RatMatrix basis = f.ring == Ring::Z ? to_rational_matrix(integer_kernel_basis(to_integer_matrix(c.d)))
                                      : kernel_basis(c.d);
  return FlowBasis{std::move(basis), std::move(c.chain1)};
}

ObstructionModule obstruction_module(const Graph& g, const Representation& f, Ring ring) {
  FlowComplex c = boundary_matrix(g, f);
  CokernelResult coker = cokernel_presentation(c.d, ring);
  return ObstructionModule{std::move(coker.presentation), std::move(coker.projection), std::move(c.chain0)};
}

FlowCheck is_flow(const Graph& g, const Representation& f, const Chain1& chain) {
  const FlowComplex c = boundary_matrix(g, f);
  if (!(chain.layout == c.chain1)) fail(ErrorCode::LayoutMismatch, "1-chain layout does not match the network");
  FlowCheck out;
  out.residual = Chain0{c.chain0, c.d * chain.coords};
  out.ok = true;
  for (const auto& x : out.residual.coords) {
    if (x != 0) out.ok = false;
  }
  return out;
}

EpsilonCheck epsilon_vanishes(const Graph& g, const Representation& f, const Chain0& phi) {
  const FlowComplex c = boundary_matrix(g, f);
  if (!(phi.layout == c.chain0)) fail(ErrorCode::LayoutMismatch, "0-chain layout does not match the network");
  EpsilonCheck out;
  if (f.ring == Ring::Z) {
    std::vector<Integer> rhs;
    for (const auto& x : phi.coords) {
      if (!is_integral(x)) fail(ErrorCode::InputError, "non-integral 0-chain over Z");
      rhs.push_back(x.get_num());
    }
    if (auto x = solve_integer(to_integer_matrix(c.d), rhs)) {
      out.vanishes = true;
      out.witness = Chain1{c.chain1, RatVector(x->begin(), x->end())};
    }
    return out;
  }
  if (auto x = solve(c.d, phi.coords)) {
    out.vanishes = true;
    out.witness = Chain1{c.chain1, std::move(*x)};
  }
  return out;
}

}  // namespace flownet
