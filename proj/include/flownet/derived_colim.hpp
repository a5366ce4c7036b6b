#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "flownet/category.hpp"
#include "flownet/graph.hpp"
#include "flownet/linalg.hpp"

namespace flownet {

/// A nondegenerate chain c0 -> c1 -> ... -> cn of nonidentity morphisms. In
/// degree 0 `morphisms` is empty and the chain is the object `source`.
struct NerveChain {
  std::vector<std::string> morphisms;
  std::string source;
  std::size_t offset = 0;
  std::size_t size = 0;  // rank of G(source)
};

/// The normalized complex of a functor G on a retraction-free category:
/// C_n is the sum of G(c0) over nondegenerate n-chains, and
///   d(f[a1,...,an]) = G(a1) f [a2,...,an]
///                     + sum_{0<i<n} (-1)^i f [..., a_{i+1} o a_i, ...]
///                     + (-1)^n f [a1,...,a_{n-1}].
/// Chains within a degree are ordered lexicographically by morphism id.
class NormalizedComplex {
 public:
  NormalizedComplex(const FinCategory& c, const CatFunctor& g);

  /// Highest degree with at least one chain.
  std::size_t top_degree() const { return degrees_.size() - 1; }
  const std::vector<NerveChain>& chains(std::size_t n) const;
  std::size_t rank(std::size_t n) const;
  std::optional<std::size_t> find_chain(std::size_t n, const std::vector<std::string>& morphisms) const;

  /// d_n : C_n -> C_{n-1}; d_0 is the zero map to the zero module. Degrees
  /// above the top give correctly shaped zero maps.
  RatMatrix boundary(std::size_t n) const;

 private:
  std::vector<std::vector<NerveChain>> degrees_;
  std::vector<std::size_t> totals_;
  std::vector<RatMatrix> boundaries_;
};

/// Validates the category and the functor (ValidationError on failure).
NormalizedComplex normalized_complex(const FinCategory& c, const CatFunctor& g);

/// colim_n as the degree-n homology of the normalized complex.
QuotientPresentation derived_colimit(const FinCategory& c, const CatFunctor& g, std::size_t n, Ring ring);

std::string factorization_arrow_object(std::string_view arrow);
std::string factorization_vertex_object(std::string_view vertex);
std::string factorization_source_morphism(std::string_view arrow);
std::string factorization_target_morphism(std::string_view arrow);

/// The factorization subcategory on arrows and vertices, already opposed:
/// objects "A:a" and "V:v", and per arrow a the two morphisms
/// "s:a": A:a -> V:s(a) and "t:a": A:a -> V:t(a). Nothing composes.
FinCategory factorization_subcategory(const Graph& g);

/// A:a -> F(s(a)), V:v -> F(v), s:a -> identity, t:a -> F(a).
CatFunctor rep_to_factorization_functor(const Graph& g, const Representation& f);

struct OracleResult {
  QuotientPresentation phi;
  QuotientPresentation phi0;
  /// colim_1 classes mapped to 1-chains by g_a = f_[s:a].
  RatMatrix phi_basis;
  ChainLayout layout;
  std::size_t top_degree = 0;
};

/// Flows and obstructions through the derived colimits of the factorization
/// functor, independent of the boundary-matrix route.
OracleResult flow_space_oracle(const Graph& g, const Representation& f, Ring ring);

}  // namespace flownet
