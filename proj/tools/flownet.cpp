// flownet: flows, obstructions and Kirchhoff laws on graph representations.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "flownet/commands.hpp"

namespace {

std::set<std::string> split_ids(const std::string& list) {
  std::set<std::string> out;
  std::stringstream ss(list);
  std::string id;
  while (std::getline(ss, id, ',')) {
    if (!id.empty()) out.insert(id);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace flownet;

  CLI::App app{"Exact flow modules, obstructions and Kirchhoff laws on networks"};
  app.require_subcommand(1);

  std::string ring = "q";
  std::string output;
  auto* ring_opt = app.add_option("--ring", ring, "Coefficient ring: q or z (default q)")
                       ->check(CLI::IsMember({"q", "z", "Q", "Z"}));
  app.add_option("--output,-o", output, "Write the JSON report here instead of stdout");

  std::string network, chain, gram, potential, covering, category, functor, external_override;
  std::uint64_t seed = 0;
  std::size_t count = 100, degree = 0;

  auto* basis = app.add_subcommand("basis", "Basis of the Kirchhoff-1 module (flows when E is empty)");
  basis->add_option("network", network, "Network JSON")->required();
  auto* override_opt =
      basis->add_option("--external-override", external_override, "Comma-separated external vertex ids");

  auto* obstruction = app.add_subcommand("obstruction", "Presentation of the obstruction module");
  obstruction->add_option("network", network, "Network JSON")->required();

  auto* check = app.add_subcommand("check", "First Kirchhoff law residuals of a 1-chain");
  check->add_option("network", network, "Network JSON")->required();
  check->add_option("chain", chain, "1-chain JSON (arrow id -> vector)")->required();

  auto* solve2 = app.add_subcommand("solve2", "Unique chain obeying both Kirchhoff laws");
  solve2->add_option("network", network, "Network JSON")->required();
  solve2->add_option("gram", gram, "Internal product JSON")->required();
  solve2->add_option("potential", potential, "0-chain JSON (vertex id -> vector)")->required();

  auto* oracle = app.add_subcommand("oracle", "Compare flows and obstructions with the derived-colimit route");
  oracle->add_option("network", network, "Network JSON");
  auto* seed_opt = oracle->add_option("--seed", seed, "First seed of a randomized batch");
  oracle->add_option("--count", count, "Number of random networks (default 100)");

  auto* cover = app.add_subcommand("cover", "Check the covering exact sequence");
  cover->add_option("network", network, "Network JSON")->required();
  cover->add_option("covering", covering, "Covering JSON")->required();

  auto* colim = app.add_subcommand("colim", "Derived colimit of a functor on a finite category");
  colim->add_option("category", category, "Category or poset JSON")->required();
  colim->add_option("functor", functor, "Functor JSON")->required();
  colim->add_option("--degree", degree, "Homological degree (default 0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  cmd::Options opts;
  if (ring_opt->count() > 0) opts.ring = io::ring_from_string(ring);
  opts.degree = degree;

  cmd::RunResult result;
  if (basis->parsed()) {
    if (override_opt->count() > 0) opts.external_override = split_ids(external_override);
    result = cmd::basis(cmd::read_document("network", network), opts);
  } else if (obstruction->parsed()) {
    result = cmd::obstruction(cmd::read_document("network", network), opts);
  } else if (check->parsed()) {
    result = cmd::check(cmd::read_document("network", network), cmd::read_document("chain", chain), opts);
  } else if (solve2->parsed()) {
    result = cmd::solve2(cmd::read_document("network", network), cmd::read_document("gram", gram),
                         cmd::read_document("potential", potential), opts);
  } else if (oracle->parsed()) {
    if (network.empty() && seed_opt->count() == 0) {
      std::cerr << "oracle: give a network file or --seed\n";
      return 2;
    }
    opts.seed = seed;
    opts.count = count;
    std::optional<cmd::Document> doc;
    if (!network.empty()) doc = cmd::read_document("network", network);
    result = cmd::oracle(doc, opts);
  } else if (cover->parsed()) {
    result = cmd::cover(cmd::read_document("network", network), cmd::read_document("covering", covering), opts);
  } else if (colim->parsed()) {
    result = cmd::colim(cmd::read_document("category", category), cmd::read_document("functor", functor), opts);
  }

  std::cerr << result.summary << "\n";
  if (output.empty()) {
    std::cout << result.text();
  } else {
    std::ofstream out(output, std::ios::binary);
    out << result.text();
    if (!out) {
      std::cerr << "cannot write " << output << "\n";
      return 2;
    }
  }
  return result.exit_code;
}
