#pragma once

#include <map>
#include <set>
#include <string>

#include "flownet/category.hpp"
#include "flownet/graph.hpp"
#include "flownet/report.hpp"

namespace flownet {

struct Piece {
  std::set<std::string> vertices;
  std::set<std::string> arrows;
  std::set<std::string> external;
};

/// A poset-indexed family of subnetworks of one global network.
struct Covering {
  Poset poset;
  std::map<std::string, Piece> pieces;
};

/// Monotone along the order, endpoint-closed pieces, unions recover V, A and
/// E, and locally filtered: every item shared by pieces i and j lies in some
/// piece k with k <= i and k <= j (checked for vertices, arrows and external
/// vertices separately).
ValidationReport validate_covering(const Covering& c, const Network& n);

/// The subnetwork (Γ_i, E_i, F|Γ_i) of one piece.
Network piece_network(const Covering& c, const Network& n, const std::string& element);

/// i -> Φ(Γ_i, E_i; F_i) in the kirchhoff1_space basis of each piece;
/// i <= j -> extension by zero written in those bases.
CatFunctor induced_flow_functor(const Covering& c, const Network& n);

/// i -> Φ₀(Γ_i, E_i; F_i), the cokernel of d on the piece with its external
/// vertices attached to a point, in the complement basis of
/// cokernel_presentation; i <= j -> induced by inclusion of 0-chains.
CatFunctor induced_obstruction_functor(const Covering& c, const Network& n);

struct MvReport {
  std::size_t colim2_obstruction = 0;
  std::size_t colim0_flow = 0;
  std::size_t global_flow = 0;
  std::size_t colim1_obstruction = 0;
  std::size_t ker_mu = 0;
  std::size_t coker_mu = 0;
  bool left_exact = false;   // ker μ matches colim_2 Φ₀
  bool right_exact = false;  // coker μ matches colim_1 Φ₀
  bool pass = false;

  /// colim_2 Φ₀ − colim Φ + Φ − colim_1 Φ₀ (zero whenever the sequence is exact).
  long euler_characteristic() const;
};

/// Checks 0 -> colim_2 Φ₀ -> colim Φ -> Φ(Γ,E;F) -> colim_1 Φ₀ -> 0 through the
/// middle map μ induced by extension by zero. Over Q only.
MvReport mv_verify(const Covering& c, const Network& n);

}  // namespace flownet
