#include "flownet/commands.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "flownet/derived_colim.hpp"
#include "flownet/error.hpp"
#include "flownet/flow.hpp"
#include "flownet/random.hpp"

namespace flownet::cmd {

using io::Json;

namespace {

struct Outcome {
  Json result;
  bool ok = true;
  std::string summary;
};

Json parse(const Document& doc) {
  if (doc.read_error) fail(ErrorCode::InputError, *doc.read_error);
  try {
    return Json::parse(doc.text);
  } catch (const Json::parse_error& e) {
    fail(ErrorCode::InputError, doc.role + ": malformed JSON: " + e.what());
  }
}

Network load_network(const Document& doc, const Options& opts) {
  Network n = io::network_from_json(parse(doc));
  if (opts.ring) n.representation.ring = *opts.ring;
  require_valid(n);
  return n;
}

Json options_json(const Options& opts) {
  Json o = Json::object();
  o["ring"] = opts.ring ? Json(std::string(ring_name(*opts.ring))) : Json(nullptr);
  if (opts.external_override) o["external_override"] = *opts.external_override;
  return o;
}

RunResult run(const std::string& name, const std::vector<const Document*>& docs, Json options,
              const std::function<Outcome()>& body) {
  Json inputs = Json::array();
  for (const Document* d : docs) {
    inputs.push_back({{"role", d->role},
                      {"path", d->path},
                      {"sha256", d->read_error ? Json(nullptr) : Json(sha256_hex(d->text))}});
  }
  RunResult out;
  out.report = {{"command", name}, {"options", std::move(options)}, {"inputs", std::move(inputs)}};
  try {
    Outcome o = body();
    out.exit_code = o.ok ? 0 : 1;
    out.report["result"] = std::move(o.result);
    out.report["error"] = nullptr;
    out.summary = name + ": " + o.summary;
  } catch (const Error& e) {
    out.exit_code = is_input_error(e.code()) ? 2 : 1;
    out.report["result"] = nullptr;
    out.report["error"] = {{"code", std::string(error_code_name(e.code()))}, {"message", e.what()}};
    out.summary = name + ": " + std::string(error_code_name(e.code())) + ": " + e.what();
  } catch (const Json::exception& e) {
    out.exit_code = 2;
    out.report["result"] = nullptr;
    out.report["error"] = {{"code", std::string(error_code_name(ErrorCode::InputError))}, {"message", e.what()}};
    out.summary = name + ": InputError: " + e.what();
  }
  out.report["exit_code"] = out.exit_code;
  return out;
}

Json basis_json(const FlowBasis& b) {
  Json chains = Json::array();
  for (std::size_t k = 0; k < b.dim(); ++k) chains.push_back(io::to_json(Chain1{b.layout, b.basis.column(k)}));
  return {{"dim", b.dim()}, {"layout", io::to_json(b.layout)}, {"matrix", io::to_json(b.basis)}, {"chains", chains}};
}

struct OracleCase {
  bool phi_match = false;
  bool phi0_match = false;
  Json detail;
};

OracleCase oracle_case(const Network& n) {
  const Ring ring = n.representation.ring;
  const FlowBasis direct = flow_space(n.graph, n.representation);
  const ObstructionModule obstruction = obstruction_module(n.graph, n.representation, ring);
  const OracleResult dual = flow_space_oracle(n.graph, n.representation, ring);
  OracleCase c;
  c.phi_match = dual.phi.free_rank == direct.dim() && dual.phi.invariant_factors.empty() &&
                same_column_span(direct.basis, dual.phi_basis);
  c.phi0_match = dual.phi0 == obstruction.presentation;
  c.detail = {{"ring", std::string(ring_name(ring))},
              {"phi", {{"direct_dim", direct.dim()}, {"oracle", io::to_json(dual.phi, ring)}, {"match", c.phi_match}}},
              {"phi0",
               {{"direct", io::to_json(obstruction.presentation, ring)},
                {"oracle", io::to_json(dual.phi0, ring)},
                {"match", c.phi0_match}}},
              {"oracle_top_degree", dual.top_degree}};
  return c;
}

}  // namespace

Document read_document(std::string role, const std::string& path) {
  Document d{std::move(role), path, {}, std::nullopt};
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    d.read_error = d.role + ": cannot read '" + path + "'";
    return d;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  d.text = ss.str();
  return d;
}

Document inline_document(std::string role, std::string text) {
  return Document{std::move(role), "<inline>", std::move(text), std::nullopt};
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xf]);
  }
  return out;
}

std::string RunResult::text() const { return report.dump(2) + "\n"; }

RunResult basis(const Document& network, const Options& opts) {
  return run("basis", {&network}, options_json(opts), [&] {
    Network n = load_network(network, opts);
    if (opts.external_override) {
      n.external = *opts.external_override;
      require_valid(n);
    }
    const FlowBasis b = kirchhoff1_space(n);
    Json result = basis_json(b);
    result["ring"] = std::string(ring_name(n.representation.ring));
    result["external"] = n.external;
    return Outcome{std::move(result), true, "dim " + std::to_string(b.dim())};
  });
}

RunResult obstruction(const Document& network, const Options& opts) {
  return run("obstruction", {&network}, options_json(opts), [&] {
    const Network n = load_network(network, opts);
    const Ring ring = n.representation.ring;
    const ObstructionModule m = obstruction_module(n.graph, n.representation, ring);
    Json result = {{"ring", std::string(ring_name(ring))},
                   {"presentation", io::to_json(m.presentation, ring)},
                   {"chain0_layout", io::to_json(m.chain0)}};
    if (m.epsilon) result["epsilon"] = io::to_json(*m.epsilon);
    return Outcome{std::move(result), true, to_string(m.presentation, ring)};
  });
}

RunResult check(const Document& network, const Document& chain, const Options& opts) {
  return run("check", {&network, &chain}, options_json(opts), [&] {
    const Network n = load_network(network, opts);
    const ChainLayout layout = chain1_layout(n.graph, n.representation);
    const Chain1 f = Chain1::from_blocks(layout, io::blocks_from_json(parse(chain)));
    const FlowCheck c = is_flow(n.graph, n.representation, f);
    Json internal = Json::object(), external = Json::object();
    bool pass = true;
    for (const auto& [v, block] : c.residual.to_blocks()) {
      const bool zero = std::all_of(block.begin(), block.end(), [](const Rational& x) { return x == 0; });
      if (n.external.contains(v)) {
        external[v] = io::to_json(block);
      } else {
        internal[v] = io::to_json(block);
        pass = pass && zero;
      }
    }
    Json result = {{"pass", pass},
                   {"is_flow", c.ok},
                   {"external", n.external},
                   {"residual", {{"internal", internal}, {"external", external}}}};
    return Outcome{std::move(result), pass, pass ? "pass" : "fail"};
  });
}

RunResult solve2(const Document& network, const Document& gram, const Document& potential, const Options& opts) {
  return run("solve2", {&network, &gram, &potential}, options_json(opts), [&] {
    const Network n = load_network(network, opts);
    const FlowComplex fc = boundary_matrix(n.graph, n.representation);
    const GramForm g = io::gram_from_json(parse(gram), fc.chain1);
    const Chain0 phi = Chain0::from_blocks(fc.chain0, io::blocks_from_json(parse(potential)));
    const Chain1 f = kirchhoff2_solve(n, g, phi);

    const FlowBasis flows = flow_space(n.graph, n.representation);
    RatVector boundary_residual = fc.d * f.coords;
    for (std::size_t i = 0; i < boundary_residual.size(); ++i) boundary_residual[i] -= phi.coords[i];
    const RatVector orthogonality = flows.basis.transpose() * (g.gram * f.coords);
    auto all_zero = [](const RatVector& v) {
      return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
    };
    const bool verified = all_zero(boundary_residual) && all_zero(orthogonality);
    Json result = {{"chain", io::to_json(f)},
                   {"verification",
                    {{"boundary_residual", io::to_json(Chain0{fc.chain0, boundary_residual})},
                     {"orthogonality_residual", io::to_json(orthogonality)},
                     {"flow_basis", io::to_json(flows.basis)},
                     {"both_zero", verified}}}};
    if (!verified) fail(ErrorCode::InternalTheoremViolation, "solution failed its own verification");
    return Outcome{std::move(result), true, "solved, " + std::to_string(f.coords.size()) + " coordinates"};
  });
}

RunResult oracle(const std::optional<Document>& network, const Options& opts) {
  std::vector<const Document*> docs;
  if (network) docs.push_back(&*network);
  Json options = options_json(opts);
  if (!network) {
    options["seed"] = opts.seed;
    options["count"] = opts.count;
  }
  return run("oracle", docs, std::move(options), [&] {
    if (network) {
      const Network n = load_network(*network, opts);
      OracleCase c = oracle_case(n);
      const bool match = c.phi_match && c.phi0_match;
      c.detail["match"] = match;
      return Outcome{std::move(c.detail), match, match ? "match" : "MISMATCH"};
    }
    RandomNetworkOptions gen;
    gen.ring = opts.ring.value_or(Ring::Q);
    Json cases = Json::array(), mismatches = Json::array();
    for (std::uint64_t s = opts.seed; s < opts.seed + opts.count; ++s) {
      Rng rng(s);
      const Network n = random_network(rng, gen);
      const OracleCase c = oracle_case(n);
      const bool match = c.phi_match && c.phi0_match;
      if (!match) mismatches.push_back(s);
      cases.push_back({{"seed", s},
                       {"vertices", n.graph.vertices().size()},
                       {"arrows", n.graph.arrows().size()},
                       {"phi_match", c.phi_match},
                       {"phi0_match", c.phi0_match}});
    }
    const bool all = mismatches.empty();
    Json result = {{"ring", std::string(ring_name(gen.ring))},
                   {"cases", cases},
                   {"mismatches", mismatches},
                   {"all_match", all}};
    return Outcome{std::move(result), all,
                   std::to_string(opts.count - mismatches.size()) + "/" + std::to_string(opts.count) + " match"};
  });
}

RunResult cover(const Document& network, const Document& covering, const Options& opts) {
  return run("cover", {&network, &covering}, options_json(opts), [&] {
    const Network n = load_network(network, opts);
    const Covering c = io::covering_from_json(parse(covering));
    const MvReport r = mv_verify(c, n);
    return Outcome{io::to_json(r), r.pass, r.pass ? "exact" : "NOT exact"};
  });
}

RunResult colim(const Document& category, const Document& functor, const Options& opts) {
  Json options = options_json(opts);
  options["degree"] = opts.degree;
  return run("colim", {&category, &functor}, std::move(options), [&] {
    const FinCategory c = io::category_from_json(parse(category));
    const ValidationReport report = validate_category(c);
    if (!report.ok()) fail(ErrorCode::ValidationError, "invalid category: " + report.summary());
    const Json fj = parse(functor);
    Ring ring = Ring::Q;
    if (fj.is_object() && fj.contains("ring") && fj.at("ring").is_string()) {
      ring = io::ring_from_string(fj.at("ring").get<std::string>());
    }
    ring = opts.ring.value_or(ring);
    const CatFunctor g = io::functor_from_json(fj, c, ring);
    const NormalizedComplex cx = normalized_complex(c, g);
    const QuotientPresentation p = homology_at(cx.boundary(opts.degree + 1), cx.boundary(opts.degree), ring);
    Json ranks = Json::array();
    for (std::size_t k = 0; k <= cx.top_degree(); ++k) ranks.push_back(cx.rank(k));
    Json result = {{"degree", opts.degree},
                   {"ring", std::string(ring_name(ring))},
                   {"presentation", io::to_json(p, ring)},
                   {"chain_ranks", ranks}};
    return Outcome{std::move(result), true, "colim_" + std::to_string(opts.degree) + " = " + to_string(p, ring)};
  });
}

}  // namespace flownet::cmd
