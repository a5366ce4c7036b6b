#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "flownet/matrix.hpp"
#include "flownet/report.hpp"

namespace flownet {

struct Morphism {
  std::string id;
  std::string source;
  std::string target;
};

/// One entry of the composition table: `result` = `second` o `first`
/// (apply `first`, then `second`).
struct Composition {
  std::string first;
  std::string second;
  std::string result;
};

/// Finite category given by its nonidentity morphisms and a composition table.
/// The identity of object x is referred to as "id:x"; that prefix is reserved.
class FinCategory {
 public:
  FinCategory() = default;
  FinCategory(std::vector<std::string> objects, std::vector<Morphism> morphisms,
              std::vector<Composition> compositions);

  static std::string identity_id(std::string_view object);
  static bool is_identity_id(std::string_view id);

  const std::vector<std::string>& objects() const noexcept { return objects_; }
  /// Nonidentity morphisms, sorted by id.
  const std::vector<Morphism>& morphisms() const noexcept { return morphisms_; }
  const std::vector<Composition>& compositions() const noexcept { return compositions_; }

  bool has_object(std::string_view id) const;
  const Morphism* find_morphism(std::string_view id) const;

  /// Source/target of any morphism id, identities included.
  std::optional<std::string> source(std::string_view id) const;
  std::optional<std::string> target(std::string_view id) const;

  /// Composite of `first` then `second`; identities are neutral. nullopt when
  /// the table has no entry.
  std::optional<std::string> compose(const std::string& first, const std::string& second) const;

  /// Including identities.
  std::size_t morphism_count() const { return objects_.size() + morphisms_.size(); }

 private:
  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<Composition> compositions_;
  std::map<std::pair<std::string, std::string>, std::string> table_;
};

/// Checks ids, the composition table (complete on composable pairs, endpoint
/// consistent, associative), absence of retractions, and that nonidentity
/// composable chains are bounded (the composability digraph is acyclic).
ValidationReport validate_category(const FinCategory& c);

/// Reflexive-transitive closure of a relation, checked for antisymmetry.
class Poset {
 public:
  Poset() = default;
  /// Raises NotAPoset on a cycle between distinct elements or an unknown element.
  Poset(std::vector<std::string> elements, const std::vector<std::pair<std::string, std::string>>& leq);

  const std::vector<std::string>& elements() const noexcept { return elements_; }
  bool leq(std::string_view a, std::string_view b) const;
  bool less(std::string_view a, std::string_view b) const { return a != b && leq(a, b); }
  bool contains(std::string_view a) const;

 private:
  std::size_t index(std::string_view a) const;

  std::vector<std::string> elements_;
  std::vector<std::vector<bool>> leq_;
};

/// Morphism "i<=j" for every i < j; composition forced.
FinCategory poset_category(const Poset& p);
FinCategory poset_category(std::vector<std::string> elements,
                           const std::vector<std::pair<std::string, std::string>>& leq);

std::string poset_morphism_id(std::string_view lower, std::string_view upper);

/// Functor to free modules: ranks per object, matrices dim(target) x dim(source)
/// per nonidentity morphism. Identities map to identity matrices.
struct CatFunctor {
  Ring ring = Ring::Q;
  std::map<std::string, std::size_t> object_dims;
  std::map<std::string, RatMatrix> morphism_maps;

  std::size_t dim(const std::string& object) const;
  /// Matrix of any morphism of `c`, identities included.
  RatMatrix map(const FinCategory& c, const std::string& morphism) const;
};

/// Shapes, integrality over Z, and map(second o first) == map(second) * map(first)
/// for every composition table entry.
ValidationReport validate_functor(const FinCategory& c, const CatFunctor& f);

CatFunctor constant_functor(const FinCategory& c, Ring ring, std::size_t rank);

}  // namespace flownet
