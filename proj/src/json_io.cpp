#include "flownet/json_io.hpp"

#include "flownet/error.hpp"

namespace flownet::io {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorCode::InputError, what); }

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) bad(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where + ": missing \"" + key + "\"");
  return *it;
}

std::string string_of(const Json& j, const std::string& where) {
  if (!j.is_string()) bad(where + ": expected a string");
  return j.get<std::string>();
}

std::size_t size_of(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) bad(where + ": expected a non-negative integer");
  return j.get<std::size_t>();
}

std::vector<std::string> strings_of(const Json& j, const std::string& where) {
  if (!j.is_array()) bad(where + ": expected an array of ids");
  std::vector<std::string> out;
  for (const auto& x : j) out.push_back(string_of(x, where));
  return out;
}

std::set<std::string> id_set(const Json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) return {};
  const auto ids = strings_of(j.at(key), where + "." + key);
  return {ids.begin(), ids.end()};
}

RatVector vector_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) bad(where + ": expected an array");
  RatVector out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

}  // namespace

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  bad("expected an integer or a \"p/q\" string, got " + j.dump());
}

Json to_json(const Rational& x) { return to_string(x); }

Json to_json(const RatVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const RatMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

RatMatrix matrix_from_json(const Json& j, std::size_t cols_if_empty) {
  if (!j.is_array()) bad("matrix must be an array of rows");
  if (j.empty()) return RatMatrix(0, cols_if_empty);
  const std::size_t cols = j.front().is_array() ? j.front().size() : 0;
  RatMatrix m(j.size(), cols);
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != cols) bad("matrix rows must be arrays of equal length");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = rational_from_json(j[i][k]);
  }
  return m;
}

Json to_json(const QuotientPresentation& p, Ring ring) {
  Json torsion = Json::array();
  for (const auto& f : p.invariant_factors) torsion.push_back(to_string(f));
  return {{"free_rank", p.free_rank}, {"torsion", torsion}, {"text", to_string(p, ring)}};
}

Ring ring_from_string(std::string_view s) {
  if (s == "Q" || s == "q") return Ring::Q;
  if (s == "Z" || s == "z") return Ring::Z;
  bad("ring must be Q or Z, got \"" + std::string(s) + "\"");
}

Network network_from_json(const Json& j) {
  if (!j.is_object()) bad("network: expected an object");
  Network n;
  if (j.contains("ring")) n.representation.ring = ring_from_string(string_of(j.at("ring"), "network.ring"));

  std::vector<std::string> vertices;
  const Json& vs = field(j, "vertices", "network");
  if (!vs.is_array()) bad("network.vertices: expected an array");
  for (const auto& v : vs) {
    const std::string id = string_of(field(v, "id", "network.vertices[]"), "vertex id");
    vertices.push_back(id);
    n.representation.vertex_dims[id] = size_of(field(v, "dim", "vertex '" + id + "'"), "vertex '" + id + "'.dim");
  }

  std::vector<Arrow> arrows;
  const Json as = j.value("arrows", Json::array());
  if (!as.is_array()) bad("network.arrows: expected an array");
  for (const auto& a : as) {
    const std::string id = string_of(field(a, "id", "network.arrows[]"), "arrow id");
    const std::string where = "arrow '" + id + "'";
    Arrow arrow{id, string_of(field(a, "source", where), where + ".source"),
                string_of(field(a, "target", where), where + ".target")};
    auto dim_of = [&](const std::string& v) -> std::size_t {
      auto it = n.representation.vertex_dims.find(v);
      return it == n.representation.vertex_dims.end() ? 0 : it->second;
    };
    const std::size_t rows = dim_of(arrow.target), cols = dim_of(arrow.source);
    if (a.contains("matrix")) {
      n.representation.arrow_maps[id] = matrix_from_json(a.at("matrix"), cols);
    } else if (rows * cols == 0) {
      n.representation.arrow_maps[id] = RatMatrix(rows, cols);
    } else {
      bad(where + ": missing \"matrix\"");
    }
    arrows.push_back(std::move(arrow));
  }
  n.graph = Graph(std::move(vertices), std::move(arrows));
  n.external = id_set(j, "external", "network");
  return n;
}

Json to_json(const Network& n) {
  Json vertices = Json::array();
  for (const auto& v : n.graph.vertices()) vertices.push_back({{"id", v}, {"dim", n.representation.dim(v)}});
  Json arrows = Json::array();
  for (const auto& a : n.graph.arrows()) {
    arrows.push_back({{"id", a.id}, {"source", a.source}, {"target", a.target}, {"matrix", to_json(n.representation.map(a.id))}});
  }
  return {{"ring", std::string(ring_name(n.representation.ring))},
          {"vertices", vertices},
          {"arrows", arrows},
          {"external", n.external}};
}

std::map<std::string, RatVector> blocks_from_json(const Json& j) {
  if (!j.is_object()) bad("chain: expected an object mapping ids to vectors");
  std::map<std::string, RatVector> out;
  for (const auto& [id, v] : j.items()) out[id] = vector_from_json(v, "chain block '" + id + "'");
  return out;
}

Json blocks_to_json(const std::map<std::string, RatVector>& blocks) {
  Json out = Json::object();
  for (const auto& [id, v] : blocks) out[id] = to_json(v);
  return out;
}

Json to_json(const ChainLayout& layout) {
  Json out = Json::array();
  for (const auto& b : layout.blocks()) out.push_back({{"id", b.id}, {"offset", b.offset}, {"size", b.size}});
  return out;
}

GramForm gram_from_json(const Json& j, const ChainLayout& chain1) {
  if (!j.is_object()) bad("gram: expected an object");
  if (j.contains("gram")) {
    GramForm g{matrix_from_json(j.at("gram"))};
    validate_gram(g, chain1);
    return g;
  }
  if (!j.contains("diagonal")) bad("gram: expected \"gram\" or \"diagonal\"");
  const Json& diag = j.at("diagonal");
  std::map<std::string, Rational> weights;
  if (diag.is_array()) {
    if (diag.size() != chain1.blocks().size()) {
      bad("gram.diagonal: expected " + std::to_string(chain1.blocks().size()) + " weights, one per arrow");
    }
    for (std::size_t i = 0; i < diag.size(); ++i) weights[chain1.blocks()[i].id] = rational_from_json(diag[i]);
  } else if (diag.is_object()) {
    for (const auto& [id, w] : diag.items()) {
      if (chain1.find(id) == nullptr) bad("gram.diagonal: unknown arrow '" + id + "'");
      weights[id] = rational_from_json(w);
    }
    for (const auto& b : chain1.blocks()) {
      if (!weights.contains(b.id)) bad("gram.diagonal: no weight for arrow '" + b.id + "'");
    }
  } else {
    bad("gram.diagonal: expected an array or an object");
  }
  return gram_from_arrow_weights(chain1, weights);
}

Poset poset_from_json(const Json& j) {
  const auto elements = strings_of(field(j, "elements", "poset"), "poset.elements");
  std::vector<std::pair<std::string, std::string>> leq;
  const Json rel = j.value("leq", Json::array());
  if (!rel.is_array()) bad("poset.leq: expected an array of pairs");
  for (const auto& p : rel) {
    if (!p.is_array() || p.size() != 2) bad("poset.leq: expected pairs [a, b]");
    leq.emplace_back(string_of(p[0], "poset.leq"), string_of(p[1], "poset.leq"));
  }
  return Poset(elements, leq);
}

FinCategory category_from_json(const Json& j) {
  if (!j.is_object()) bad("category: expected an object");
  if (j.contains("elements")) return poset_category(poset_from_json(j));

  std::vector<std::string> objects;
  for (const auto& o : field(j, "objects", "category")) {
    objects.push_back(o.is_string() ? o.get<std::string>() : string_of(field(o, "id", "category.objects[]"), "object id"));
  }
  std::vector<Morphism> morphisms;
  for (const auto& m : j.value("morphisms", Json::array())) {
    const std::string id = string_of(field(m, "id", "category.morphisms[]"), "morphism id");
    morphisms.push_back({id, string_of(field(m, "source", "morphism '" + id + "'"), "source"),
                         string_of(field(m, "target", "morphism '" + id + "'"), "target")});
  }
  std::vector<Composition> compositions;
  for (const auto& c : j.value("compositions", Json::array())) {
    compositions.push_back({string_of(field(c, "after", "composition"), "after"),
                            string_of(field(c, "then", "composition"), "then"),
                            string_of(field(c, "equals", "composition"), "equals")});
  }
  return FinCategory(std::move(objects), std::move(morphisms), std::move(compositions));
}

CatFunctor functor_from_json(const Json& j, const FinCategory& c, Ring ring) {
  if (!j.is_object()) bad("functor: expected an object");
  if (j.contains("constant")) return constant_functor(c, ring, size_of(j.at("constant"), "functor.constant"));
  CatFunctor f;
  f.ring = ring;
  for (const auto& o : field(j, "objects", "functor")) {
    const std::string id = string_of(field(o, "id", "functor.objects[]"), "object id");
    f.object_dims[id] = size_of(field(o, "dim", "object '" + id + "'"), "object '" + id + "'.dim");
  }
  for (const auto& m : j.value("morphisms", Json::array())) {
    const std::string id = string_of(field(m, "id", "functor.morphisms[]"), "morphism id");
    std::size_t cols = 0;
    if (auto src = c.source(id); src && f.object_dims.contains(*src)) cols = f.object_dims.at(*src);
    if (!m.contains("matrix")) {
      auto tgt = c.target(id);
      const std::size_t rows = tgt && f.object_dims.contains(*tgt) ? f.object_dims.at(*tgt) : 0;
      if (rows * cols != 0) bad("morphism '" + id + "': missing \"matrix\"");
      f.morphism_maps[id] = RatMatrix(rows, cols);
    } else {
      f.morphism_maps[id] = matrix_from_json(m.at("matrix"), cols);
    }
  }
  return f;
}

Covering covering_from_json(const Json& j) {
  Covering c{poset_from_json(field(j, "poset", "covering")), {}};
  const Json& pieces = field(j, "pieces", "covering");
  if (!pieces.is_object()) bad("covering.pieces: expected an object keyed by poset element");
  for (const auto& [id, p] : pieces.items()) {
    const std::string where = "piece '" + id + "'";
    if (!p.is_object()) bad(where + ": expected an object");
    c.pieces[id] = {id_set(p, "vertices", where), id_set(p, "arrows", where), id_set(p, "external", where)};
  }
  return c;
}

Json to_json(const Covering& c) {
  Json leq = Json::array();
  for (const auto& a : c.poset.elements())
    for (const auto& b : c.poset.elements())
      if (c.poset.less(a, b)) leq.push_back({a, b});
  Json pieces = Json::object();
  for (const auto& [id, p] : c.pieces) {
    pieces[id] = {{"vertices", p.vertices}, {"arrows", p.arrows}, {"external", p.external}};
  }
  return {{"poset", {{"elements", c.poset.elements()}, {"leq", leq}}}, {"pieces", pieces}};
}

Json to_json(const MvReport& r) {
  return {{"dims",
           {{"colim2_obstruction", r.colim2_obstruction},
            {"colim0_flow", r.colim0_flow},
            {"global_flow", r.global_flow},
            {"colim1_obstruction", r.colim1_obstruction}}},
          {"ker_mu", r.ker_mu},
          {"coker_mu", r.coker_mu},
          {"left_exact", r.left_exact},
          {"right_exact", r.right_exact},
          {"euler_characteristic", r.euler_characteristic()},
          {"pass", r.pass}};
}

}  // namespace flownet::io
