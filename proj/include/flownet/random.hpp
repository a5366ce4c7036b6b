#pragma once

#include <cstdint>
#include <random>

#include "flownet/covering.hpp"
#include "flownet/graph.hpp"
#include "flownet/kirchhoff.hpp"

namespace flownet {

using Rng = std::mt19937_64;

struct RandomNetworkOptions {
  std::size_t max_vertices = 8;
  std::size_t max_arrows = 12;
  std::size_t max_dim = 3;
  int max_abs = 5;  // numerators in [-max_abs, max_abs], denominators in [1, max_abs]
  bool integral = false;
  Ring ring = Ring::Q;
  double external_probability = 0.0;
};

/// Vertices "v0".., arrows "a00".. with random endpoints (loops and parallel
/// arrows included) and random matrices.
Network random_network(Rng& rng, const RandomNetworkOptions& opts = {});

/// Rank-one identity representation on a random graph.
Network random_classical_network(Rng& rng, std::size_t max_vertices = 8, std::size_t max_arrows = 12);

/// Removes every arrow leaving a random subset of vertices and makes that
/// subset the external set, so every external vertex is attractive.
Network with_sink_externals(Rng& rng, Network n);

/// A^T A + I for a random integer A.
GramForm random_positive_definite_gram(Rng& rng, const ChainLayout& layout);

/// Pieces i and j whose union is the network and k = i ∩ j, with k < i, k < j.
Covering random_pushout_covering(Rng& rng, const Network& n);

}  // namespace flownet
