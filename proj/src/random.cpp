#include "flownet/random.hpp"

#include <algorithm>
#include <cstdio>
#include <iterator>

namespace flownet {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

Rational random_entry(Rng& rng, int max_abs, bool integral) {
  const int num = std::uniform_int_distribution<int>(-max_abs, max_abs)(rng);
  const int den = integral ? 1 : std::uniform_int_distribution<int>(1, max_abs)(rng);
  return make_rational(num, den);
}

std::string indexed(const char* prefix, std::size_t i, int width) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%s%0*zu", prefix, width, i);
  return buf;
}

}  // namespace

Network random_network(Rng& rng, const RandomNetworkOptions& opts) {
  const std::size_t nv = uniform(rng, 1, opts.max_vertices);
  const std::size_t na = uniform(rng, 0, opts.max_arrows);
  std::vector<std::string> vertices;
  for (std::size_t i = 0; i < nv; ++i) vertices.push_back(indexed("v", i, 1));
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i < na; ++i) {
    arrows.push_back({indexed("a", i, 2), vertices[uniform(rng, 0, nv - 1)], vertices[uniform(rng, 0, nv - 1)]});
  }

  Network n;
  n.graph = Graph(vertices, arrows);
  n.representation.ring = opts.ring;
  for (const auto& v : vertices) n.representation.vertex_dims[v] = uniform(rng, 0, opts.max_dim);
  for (const auto& a : arrows) {
    RatMatrix m(n.representation.dim(a.target), n.representation.dim(a.source));
    for (auto& x : m.data()) x = random_entry(rng, opts.max_abs, opts.integral || opts.ring == Ring::Z);
    n.representation.arrow_maps[a.id] = std::move(m);
  }
  for (const auto& v : vertices) {
    if (opts.external_probability > 0 && coin(rng, opts.external_probability)) n.external.insert(v);
  }
  return n;
}

Network random_classical_network(Rng& rng, std::size_t max_vertices, std::size_t max_arrows) {
  RandomNetworkOptions opts;
  opts.max_vertices = max_vertices;
  opts.max_arrows = max_arrows;
  Network n = random_network(rng, opts);
  n.representation = constant_representation(n.graph, Ring::Q, 1);
  return n;
}

Network with_sink_externals(Rng& rng, Network n) {
  std::set<std::string> sinks;
  for (const auto& v : n.graph.vertices()) {
    if (coin(rng, 0.4)) sinks.insert(v);
  }
  std::vector<Arrow> kept;
  for (const auto& a : n.graph.arrows()) {
    if (sinks.contains(a.source)) {
      n.representation.arrow_maps.erase(a.id);
    } else {
      kept.push_back(a);
    }
  }
  n.graph = Graph(n.graph.vertices(), kept);
  n.external = sinks;
  return n;
}

GramForm random_positive_definite_gram(Rng& rng, const ChainLayout& layout) {
  const std::size_t size = layout.total();
  RatMatrix a(size, size);
  for (auto& x : a.data()) x = random_entry(rng, 3, true);
  return GramForm{a.transpose() * a + RatMatrix::identity(size)};
}

Covering random_pushout_covering(Rng& rng, const Network& n) {
  Piece pi, pj;
  for (const auto& v : n.graph.vertices()) {
    switch (uniform(rng, 0, 2)) {
      case 0: pi.vertices.insert(v); break;
      case 1: pj.vertices.insert(v); break;
      default:
        pi.vertices.insert(v);
        pj.vertices.insert(v);
    }
  }
  for (const auto& a : n.graph.arrows()) {
    const bool in_i = pi.vertices.contains(a.source) && pi.vertices.contains(a.target);
    const bool in_j = pj.vertices.contains(a.source) && pj.vertices.contains(a.target);
    if (in_i && in_j) {
      const std::size_t pick = uniform(rng, 0, 2);
      if (pick != 1) pi.arrows.insert(a.id);
      if (pick != 0) pj.arrows.insert(a.id);
    } else if (in_j) {
      pj.arrows.insert(a.id);
    } else {
      pi.vertices.insert(a.source);
      pi.vertices.insert(a.target);
      pi.arrows.insert(a.id);
    }
  }

  Piece pk;
  std::set_intersection(pi.vertices.begin(), pi.vertices.end(), pj.vertices.begin(), pj.vertices.end(),
                        std::inserter(pk.vertices, pk.vertices.end()));
  std::set_intersection(pi.arrows.begin(), pi.arrows.end(), pj.arrows.begin(), pj.arrows.end(),
                        std::inserter(pk.arrows, pk.arrows.end()));
  for (Piece* p : {&pi, &pj, &pk}) {
    for (const auto& e : n.external) {
      if (p->vertices.contains(e)) p->external.insert(e);
    }
  }

  Covering c{Poset({"i", "j", "k"}, {{"k", "i"}, {"k", "j"}}), {}};
  c.pieces["i"] = std::move(pi);
  c.pieces["j"] = std::move(pj);
  c.pieces["k"] = std::move(pk);
  return c;
}

}  // namespace flownet
