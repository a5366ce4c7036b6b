#include "flownet/category.hpp"

#include <algorithm>
#include <functional>

#include "flownet/error.hpp"

namespace flownet {

namespace {
constexpr std::string_view kIdentityPrefix = "id:";
}

FinCategory::FinCategory(std::vector<std::string> objects, std::vector<Morphism> morphisms,
                         std::vector<Composition> compositions)
    : objects_(std::move(objects)), morphisms_(std::move(morphisms)), compositions_(std::move(compositions)) {
  std::stable_sort(objects_.begin(), objects_.end());
  std::stable_sort(morphisms_.begin(), morphisms_.end(),
                   [](const Morphism& a, const Morphism& b) { return a.id < b.id; });
  for (const auto& c : compositions_) table_.emplace(std::make_pair(c.first, c.second), c.result);
}

std::string FinCategory::identity_id(std::string_view object) {
  return std::string(kIdentityPrefix) + std::string(object);
}

bool FinCategory::is_identity_id(std::string_view id) { return id.starts_with(kIdentityPrefix); }

bool FinCategory::has_object(std::string_view id) const {
  return std::binary_search(objects_.begin(), objects_.end(), id);
}

const Morphism* FinCategory::find_morphism(std::string_view id) const {
  auto it = std::lower_bound(morphisms_.begin(), morphisms_.end(), id,
                             [](const Morphism& m, std::string_view key) { return m.id < key; });
  if (it == morphisms_.end() || it->id != id) return nullptr;
  return &*it;
}

std::optional<std::string> FinCategory::source(std::string_view id) const {
  if (is_identity_id(id)) {
    auto obj = id.substr(kIdentityPrefix.size());
    if (has_object(obj)) return std::string(obj);
    return std::nullopt;
  }
  if (const Morphism* m = find_morphism(id)) return m->source;
  return std::nullopt;
}

std::optional<std::string> FinCategory::target(std::string_view id) const {
  if (is_identity_id(id)) return source(id);
  if (const Morphism* m = find_morphism(id)) return m->target;
  return std::nullopt;
}

std::optional<std::string> FinCategory::compose(const std::string& first, const std::string& second) const {
  if (is_identity_id(first)) return second;
  if (is_identity_id(second)) return first;
  auto it = table_.find({first, second});
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

ValidationReport validate_category(const FinCategory& c) {
  ValidationReport report;
  const auto& objects = c.objects();
  const auto& morphisms = c.morphisms();

  for (std::size_t i = 1; i < objects.size(); ++i) {
    if (objects[i] == objects[i - 1]) report.add(objects[i], "duplicate object id");
  }
  for (std::size_t i = 1; i < morphisms.size(); ++i) {
    if (morphisms[i].id == morphisms[i - 1].id) report.add(morphisms[i].id, "duplicate morphism id");
  }
  for (const auto& m : morphisms) {
    if (FinCategory::is_identity_id(m.id)) report.add(m.id, "morphism id uses the reserved identity prefix");
    if (!c.has_object(m.source)) report.add(m.id, "unknown source object '" + m.source + "'");
    if (!c.has_object(m.target)) report.add(m.id, "unknown target object '" + m.target + "'");
  }
  if (!report.ok()) return report;

  std::map<std::pair<std::string, std::string>, std::string> seen;
  for (const auto& entry : c.compositions()) {
    const std::string label = entry.first + " then " + entry.second;
    auto s1 = c.source(entry.first), t1 = c.target(entry.first);
    auto s2 = c.source(entry.second), t2 = c.target(entry.second);
    auto sr = c.source(entry.result), tr = c.target(entry.result);
    if (!s1 || !s2 || !sr) {
      report.add(label, "composition entry references an unknown morphism");
      continue;
    }
    if (*t1 != *s2) report.add(label, "composition entry on a non-composable pair");
    if (*sr != *s1 || *tr != *t2) report.add(label, "composite '" + entry.result + "' has wrong endpoints");
    auto [it, inserted] = seen.emplace(std::make_pair(entry.first, entry.second), entry.result);
    if (!inserted && it->second != entry.result) report.add(label, "conflicting composition entries");
    if (FinCategory::is_identity_id(entry.result) && !FinCategory::is_identity_id(entry.first)) {
      report.add(label, "retraction: a nonidentity composite equals an identity");
    }
  }

  for (const auto& f : morphisms) {
    for (const auto& g : morphisms) {
      if (f.target == g.source && !c.compose(f.id, g.id)) {
        report.add(f.id + " then " + g.id, "composition table is missing a composable pair");
      }
    }
  }

  for (const auto& f : morphisms)
    for (const auto& g : morphisms) {
      if (f.target != g.source) continue;
      for (const auto& h : morphisms) {
        if (g.target != h.source) continue;
        auto fg = c.compose(f.id, g.id);
        auto gh = c.compose(g.id, h.id);
        if (!fg || !gh) continue;
        auto left = c.compose(*fg, h.id);
        auto right = c.compose(f.id, *gh);
        if (left && right && *left != *right) {
          report.add(f.id + " then " + g.id + " then " + h.id, "composition is not associative");
        }
      }
    }

  // Cycle in the composability digraph <=> unbounded nonidentity chains
  // (a nonidentity endomorphism is a self-loop).
  std::map<std::string, int> state;
  std::function<bool(const Morphism&)> has_cycle = [&](const Morphism& f) {
    int& s = state[f.id];
    if (s == 1) return true;
    if (s == 2) return false;
    s = 1;
    for (const auto& g : morphisms) {
      if (f.target == g.source && has_cycle(g)) return true;
    }
    state[f.id] = 2;
    return false;
  };
  for (const auto& f : morphisms) {
    if (has_cycle(f)) {
      report.add(f.id, "unbounded chains of nonidentity morphisms");
      break;
    }
  }
  return report;
}

Poset::Poset(std::vector<std::string> elements, const std::vector<std::pair<std::string, std::string>>& leq)
    : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end()) {
    fail(ErrorCode::NotAPoset, "duplicate poset element");
  }
  const std::size_t n = elements_.size();
  leq_.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) leq_[i][i] = true;
  for (const auto& [a, b] : leq) {
    if (!contains(a) || !contains(b)) fail(ErrorCode::NotAPoset, "relation references unknown element");
    leq_[index(a)][index(b)] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (leq_[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (leq_[k][j]) leq_[i][j] = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (leq_[i][j] && leq_[j][i]) {
        fail(ErrorCode::NotAPoset, "antisymmetry fails for '" + elements_[i] + "' and '" + elements_[j] + "'");
      }
}

bool Poset::contains(std::string_view a) const {
  return std::binary_search(elements_.begin(), elements_.end(), a);
}

std::size_t Poset::index(std::string_view a) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), a);
  if (it == elements_.end() || *it != a) fail(ErrorCode::NotAPoset, "unknown element '" + std::string(a) + "'");
  return static_cast<std::size_t>(it - elements_.begin());
}

bool Poset::leq(std::string_view a, std::string_view b) const { return leq_[index(a)][index(b)]; }

std::string poset_morphism_id(std::string_view lower, std::string_view upper) {
  return std::string(lower) + "<=" + std::string(upper);
}

FinCategory poset_category(const Poset& p) {
  std::vector<Morphism> morphisms;
  std::vector<Composition> compositions;
  const auto& el = p.elements();
  for (const auto& i : el)
    for (const auto& j : el)
      if (p.less(i, j)) morphisms.push_back({poset_morphism_id(i, j), i, j});
  for (const auto& i : el)
    for (const auto& j : el)
      for (const auto& k : el)
        if (p.less(i, j) && p.less(j, k)) {
          compositions.push_back({poset_morphism_id(i, j), poset_morphism_id(j, k), poset_morphism_id(i, k)});
        }
  return FinCategory(el, std::move(morphisms), std::move(compositions));
}

FinCategory poset_category(std::vector<std::string> elements,
                           const std::vector<std::pair<std::string, std::string>>& leq) {
  return poset_category(Poset(std::move(elements), leq));
}

std::size_t CatFunctor::dim(const std::string& object) const {
  auto it = object_dims.find(object);
  if (it == object_dims.end()) fail(ErrorCode::ValidationError, "no dimension for object '" + object + "'");
  return it->second;
}

RatMatrix CatFunctor::map(const FinCategory& c, const std::string& morphism) const {
  if (FinCategory::is_identity_id(morphism)) {
    auto obj = c.source(morphism);
    if (!obj) fail(ErrorCode::ValidationError, "unknown identity '" + morphism + "'");
    return RatMatrix::identity(dim(*obj));
  }
  auto it = morphism_maps.find(morphism);
  if (it == morphism_maps.end()) fail(ErrorCode::ValidationError, "no matrix for morphism '" + morphism + "'");
  return it->second;
}

ValidationReport validate_functor(const FinCategory& c, const CatFunctor& f) {
  ValidationReport report;
  for (const auto& obj : c.objects()) {
    if (!f.object_dims.contains(obj)) report.add(obj, "object has no dimension");
  }
  for (const auto& [obj, dim] : f.object_dims) {
    if (!c.has_object(obj)) report.add(obj, "dimension given for unknown object");
  }
  for (const auto& [id, m] : f.morphism_maps) {
    if (c.find_morphism(id) == nullptr) report.add(id, "matrix given for unknown morphism");
  }
  for (const auto& m : c.morphisms()) {
    auto it = f.morphism_maps.find(m.id);
    if (it == f.morphism_maps.end()) {
      report.add(m.id, "morphism has no matrix");
      continue;
    }
    auto src = f.object_dims.find(m.source);
    auto tgt = f.object_dims.find(m.target);
    if (src == f.object_dims.end() || tgt == f.object_dims.end()) continue;
    if (it->second.rows() != tgt->second || it->second.cols() != src->second) {
      report.add(m.id, "matrix has shape " + it->second.shape_string() + ", expected " +
                           std::to_string(tgt->second) + "x" + std::to_string(src->second));
    }
    if (f.ring == Ring::Z) {
      for (const auto& x : it->second.data()) {
        if (!is_integral(x)) {
          report.add(m.id, "non-integral entry over Z");
          break;
        }
      }
    }
  }
  if (!report.ok()) return report;

  for (const auto& entry : c.compositions()) {
    try {
      if (!(f.map(c, entry.second) * f.map(c, entry.first) == f.map(c, entry.result))) {
        report.add(entry.first + " then " + entry.second, "functor does not respect composition");
      }
    } catch (const Error& e) {
      report.add(entry.first + " then " + entry.second, e.what());
    }
  }
  return report;
}

CatFunctor constant_functor(const FinCategory& c, Ring ring, std::size_t rank) {
  CatFunctor f;
  f.ring = ring;
  for (const auto& obj : c.objects()) f.object_dims[obj] = rank;
  for (const auto& m : c.morphisms()) f.morphism_maps[m.id] = RatMatrix::identity(rank);
  return f;
}

}  // namespace flownet
