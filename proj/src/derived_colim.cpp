#include "flownet/derived_colim.hpp"

#include <algorithm>

#include "flownet/error.hpp"

namespace flownet {

NormalizedComplex::NormalizedComplex(const FinCategory& c, const CatFunctor& g) {
  std::vector<NerveChain> level;
  for (const auto& obj : c.objects()) level.push_back({{}, obj, 0, g.dim(obj)});
  degrees_.push_back(std::move(level));

  std::vector<NerveChain> prev;
  for (const auto& m : c.morphisms()) prev.push_back({{m.id}, m.source, 0, g.dim(m.source)});
  while (!prev.empty()) {
    std::sort(prev.begin(), prev.end(),
              [](const NerveChain& a, const NerveChain& b) { return a.morphisms < b.morphisms; });
    std::vector<NerveChain> next;
    for (const auto& chain : prev) {
      const std::string last_target = *c.target(chain.morphisms.back());
      for (const auto& m : c.morphisms()) {
        if (m.source != last_target) continue;
        NerveChain longer = chain;
        longer.morphisms.push_back(m.id);
        next.push_back(std::move(longer));
      }
    }
    degrees_.push_back(std::move(prev));
    prev = std::move(next);
  }

  for (auto& chains : degrees_) {
    std::size_t offset = 0;
    for (auto& chain : chains) {
      chain.offset = offset;
      offset += chain.size;
    }
    totals_.push_back(offset);
  }

  boundaries_.push_back(RatMatrix(0, totals_[0]));
  for (std::size_t n = 1; n < degrees_.size(); ++n) {
    RatMatrix d(totals_[n - 1], totals_[n]);
    auto add_block = [&](const NerveChain& col, const std::optional<std::size_t>& row_index,
                         const RatMatrix& block) {
      if (!row_index) fail(ErrorCode::InternalTheoremViolation, "face of a chain is not a chain");
      const NerveChain& row = degrees_[n - 1][*row_index];
      for (std::size_t i = 0; i < block.rows(); ++i)
        for (std::size_t j = 0; j < block.cols(); ++j) d(row.offset + i, col.offset + j) += block(i, j);
    };
    for (const auto& chain : degrees_[n]) {
      const auto& ms = chain.morphisms;
      const RatMatrix id = RatMatrix::identity(chain.size);
      // i = 0: push f forward along the first morphism.
      if (n == 1) {
        add_block(chain, find_chain(0, {*c.target(ms[0])}), g.map(c, ms[0]));
      } else {
        add_block(chain, find_chain(n - 1, {ms.begin() + 1, ms.end()}), g.map(c, ms[0]));
      }
      for (std::size_t i = 1; i < n; ++i) {
        const std::string composite = *c.compose(ms[i - 1], ms[i]);
        if (FinCategory::is_identity_id(composite)) continue;
        std::vector<std::string> face(ms.begin(), ms.begin() + static_cast<std::ptrdiff_t>(i - 1));
        face.push_back(composite);
        face.insert(face.end(), ms.begin() + static_cast<std::ptrdiff_t>(i + 1), ms.end());
        RatMatrix signed_id = id;
        if (i % 2 == 1)
          for (std::size_t k = 0; k < chain.size; ++k) signed_id(k, k) = -1;
        add_block(chain, find_chain(n - 1, face), signed_id);
      }
      RatMatrix last = id;
      if (n % 2 == 1)
        for (std::size_t k = 0; k < chain.size; ++k) last(k, k) = -1;
      if (n == 1) {
        add_block(chain, find_chain(0, {chain.source}), last);
      } else {
        add_block(chain, find_chain(n - 1, {ms.begin(), ms.end() - 1}), last);
      }
    }
    boundaries_.push_back(std::move(d));
  }

  for (std::size_t n = 2; n < boundaries_.size(); ++n) {
    if (!(boundaries_[n - 1] * boundaries_[n]).is_zero()) {
      fail(ErrorCode::InternalTheoremViolation, "normalized complex: d o d != 0 in degree " + std::to_string(n));
    }
  }
}

const std::vector<NerveChain>& NormalizedComplex::chains(std::size_t n) const {
  static const std::vector<NerveChain> kEmpty;
  return n < degrees_.size() ? degrees_[n] : kEmpty;
}

std::size_t NormalizedComplex::rank(std::size_t n) const { return n < totals_.size() ? totals_[n] : 0; }

std::optional<std::size_t> NormalizedComplex::find_chain(std::size_t n,
                                                         const std::vector<std::string>& morphisms) const {
  const auto& level = chains(n);
  for (std::size_t i = 0; i < level.size(); ++i) {
    if (n == 0 ? (morphisms.size() == 1 && level[i].source == morphisms[0]) : level[i].morphisms == morphisms) {
      return i;
    }
  }
  return std::nullopt;
}

RatMatrix NormalizedComplex::boundary(std::size_t n) const {
  if (n < boundaries_.size()) return boundaries_[n];
  return RatMatrix(rank(n - 1), 0);
}

NormalizedComplex normalized_complex(const FinCategory& c, const CatFunctor& g) {
  const ValidationReport cat = validate_category(c);
  if (!cat.ok()) fail(ErrorCode::ValidationError, "invalid category: " + cat.summary());
  const ValidationReport fun = validate_functor(c, g);
  if (!fun.ok()) fail(ErrorCode::ValidationError, "invalid functor: " + fun.summary());
  return NormalizedComplex(c, g);
}

QuotientPresentation derived_colimit(const FinCategory& c, const CatFunctor& g, std::size_t n, Ring ring) {
  const NormalizedComplex complex = normalized_complex(c, g);
  return homology_at(complex.boundary(n + 1), complex.boundary(n), ring);
}

std::string factorization_arrow_object(std::string_view arrow) { return "A:" + std::string(arrow); }
std::string factorization_vertex_object(std::string_view vertex) { return "V:" + std::string(vertex); }
std::string factorization_source_morphism(std::string_view arrow) { return "s:" + std::string(arrow); }
std::string factorization_target_morphism(std::string_view arrow) { return "t:" + std::string(arrow); }

FinCategory factorization_subcategory(const Graph& g) {
  std::vector<std::string> objects;
  std::vector<Morphism> morphisms;
  for (const auto& v : g.vertices()) objects.push_back(factorization_vertex_object(v));
  for (const auto& a : g.arrows()) {
    const std::string obj = factorization_arrow_object(a.id);
    objects.push_back(obj);
    morphisms.push_back({factorization_source_morphism(a.id), obj, factorization_vertex_object(a.source)});
    morphisms.push_back({factorization_target_morphism(a.id), obj, factorization_vertex_object(a.target)});
  }
  return FinCategory(std::move(objects), std::move(morphisms), {});
}

CatFunctor rep_to_factorization_functor(const Graph& g, const Representation& f) {
  CatFunctor out;
  out.ring = f.ring;
  for (const auto& v : g.vertices()) out.object_dims[factorization_vertex_object(v)] = f.dim(v);
  for (const auto& a : g.arrows()) {
    out.object_dims[factorization_arrow_object(a.id)] = f.dim(a.source);
    out.morphism_maps[factorization_source_morphism(a.id)] = RatMatrix::identity(f.dim(a.source));
    out.morphism_maps[factorization_target_morphism(a.id)] = f.map(a.id);
  }
  return out;
}

OracleResult flow_space_oracle(const Graph& g, const Representation& f, Ring ring) {
  const FinCategory cat = factorization_subcategory(g);
  CatFunctor functor = rep_to_factorization_functor(g, f);
  functor.ring = ring;
  const NormalizedComplex complex = normalized_complex(cat, functor);

  OracleResult out;
  out.top_degree = complex.top_degree();
  out.phi = homology_at(complex.boundary(2), complex.boundary(1), ring);
  out.phi0 = homology_at(complex.boundary(1), complex.boundary(0), ring);
  out.layout = chain1_layout(g, f);

  const RatMatrix d1 = complex.boundary(1);
  const RatMatrix cycles =
      ring == Ring::Z ? to_rational_matrix(integer_kernel_basis(to_integer_matrix(d1))) : kernel_basis(d1);
  out.phi_basis = RatMatrix(out.layout.total(), cycles.cols());
  for (const auto& a : g.arrows()) {
    const auto idx = complex.find_chain(1, {factorization_source_morphism(a.id)});
    const NerveChain& chain = complex.chains(1)[*idx];
    const Block& block = out.layout.at(a.id);
    for (std::size_t k = 0; k < cycles.cols(); ++k)
      for (std::size_t i = 0; i < block.size; ++i) out.phi_basis(block.offset + i, k) = cycles(chain.offset + i, k);
  }
  return out;
}

}  // namespace flownet
