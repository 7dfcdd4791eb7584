#include "cli/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <functional>
#include <ostream>

#include <CLI11.hpp>

#include "cli/formats.hpp"
#include "domset/brute_oracle.hpp"
#include "domset/ds_count.hpp"
#include "domset/errors.hpp"
#include "domset/instance_gen.hpp"
#include "domset/reduction.hpp"

namespace domset::cli {
namespace {

struct Inputs {
  std::string graph;
  std::vector<std::string> trees;
  std::string bundle;
};

void add_inputs(CLI::App& cmd, Inputs& in, bool many_trees) {
  cmd.add_option("--graph", in.graph, "graph file (or bundle)");
  if (many_trees) {
    cmd.add_option("--tree", in.trees, "tree file; repeat once per component");
  } else {
    cmd.add_option("--tree", in.trees, "tree file")->expected(1);
  }
  cmd.add_option("--bundle", in.bundle, "bundle file holding graph and tree");
}

struct Loaded {
  Graph graph;
  std::vector<TreeSpec> trees;
};

Loaded load(const Inputs& in, bool need_tree) {
  if (in.graph.empty() == in.bundle.empty()) {
    throw CLI::ValidationError("inputs", "give exactly one of --graph or --bundle");
  }
  Loaded out;
  const std::string& graph_path = in.bundle.empty() ? in.graph : in.bundle;
  const Json graph_doc = read_json_file(graph_path);
  out.graph = graph_from_json(graph_doc, graph_path);
  for (const auto& path : in.trees) out.trees.push_back(tree_from_json(read_json_file(path), path));
  if (out.trees.empty() && graph_doc.is_object() && graph_doc.contains("tree")) {
    out.trees.push_back(tree_from_json(graph_doc, graph_path));
  }
  if (need_tree && out.trees.empty()) {
    throw CLI::ValidationError("inputs", "a tree is required (--tree or a bundle)");
  }
  return out;
}

Probability parse_probability(const std::string& text) {
  auto number = [&](std::string_view part) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc{} || ptr != part.data() + part.size() || part.empty()) {
      throw CLI::ValidationError("--p", "expected NUM/DEN, got '" + text + "'");
    }
    return v;
  };
  const auto slash = text.find('/');
  Probability p;
  if (slash == std::string::npos) {
    p.num = number(text);
    p.den = 1;
  } else {
    p.num = number(std::string_view(text).substr(0, slash));
    p.den = number(std::string_view(text).substr(slash + 1));
  }
  if (p.den == 0 || p.num > p.den) {
    throw CLI::ValidationError("--p", "probability must lie in [0, 1], got '" + text + "'");
  }
  return p;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact dominating-set counting on rooted directed path graphs", "domset"};
  app.require_subcommand(1);

  std::function<int()> action;

  Inputs count_in;
  bool count_brute = false;
  auto* count = app.add_subcommand("count", "print the number of dominating sets");
  add_inputs(*count, count_in, true);
  count->add_flag("--brute", count_brute, "enumerate all subsets instead");
  count->callback([&] {
    action = [&] {
      const Loaded in = load(count_in, !count_brute);
      const BigCount total =
          count_brute ? brute_count_ds(in.graph) : count_ds_by_components(in.graph, in.trees);
      out << total << '\n';
      return static_cast<int>(kExitOk);
    };
  });

  Inputs validate_in;
  auto* validate = app.add_subcommand("validate", "check a clique tree against a graph");
  add_inputs(*validate, validate_in, false);
  validate->callback([&] {
    action = [&] {
      const Loaded in = load(validate_in, true);
      const auto report = validate_representation(in.graph, in.trees.front());
      if (report.ok()) {
        out << "ok\n";
        return static_cast<int>(kExitOk);
      }
      for (const auto& v : report.violations) out << to_string(v.kind) << ": " << v.message << '\n';
      return static_cast<int>(kExitInvalid);
    };
  });

  GenParams gen_params;
  gen_params.max_path = 3;
  auto* gen = app.add_subcommand("gen", "print a random graph + tree bundle");
  gen->add_option("--seed", gen_params.seed)->required();
  gen->add_option("--tree-nodes", gen_params.tree_nodes)->required()->check(CLI::PositiveNumber);
  gen->add_option("--vertices", gen_params.vertices)->required();
  gen->add_option("--max-path", gen_params.max_path)->check(CLI::PositiveNumber)->capture_default_str();
  gen->add_option("--branching", gen_params.branching)->check(CLI::PositiveNumber)->capture_default_str();
  gen->callback([&] {
    action = [&] {
      const Instance inst = gen_instance(gen_params);
      out << bundle_json(inst.graph, inst.tree).dump() << '\n';
      return static_cast<int>(kExitOk);
    };
  });

  std::uint64_t bip_seed = 0;
  std::size_t bip_nx = 0;
  std::size_t bip_ny = 0;
  std::string bip_p;
  auto* gen_bip = app.add_subcommand("gen-bipartite", "print a random bipartite graph");
  gen_bip->add_option("--seed", bip_seed)->required();
  gen_bip->add_option("--nx", bip_nx)->required();
  gen_bip->add_option("--ny", bip_ny)->required();
  gen_bip->add_option("--p", bip_p, "edge probability NUM/DEN")->required();
  gen_bip->callback([&] {
    const Probability p = parse_probability(bip_p);
    action = [&, p] {
      out << to_json(gen_bipartite(bip_seed, bip_nx, bip_ny, p)).dump() << '\n';
      return static_cast<int>(kExitOk);
    };
  });

  std::string reduce_file;
  unsigned reduce_r = 1;
  auto* reduce = app.add_subcommand("reduce", "print G^r with its labeling and directed tree T^r");
  reduce->add_option("--bipartite", reduce_file)->required();
  reduce->add_option("--r", reduce_r)->required()->check(CLI::PositiveNumber);
  reduce->callback([&] {
    action = [&] {
      const auto b = bipartite_from_json(read_json_file(reduce_file), reduce_file);
      out << reduction_json(build_reduction(b, reduce_r)).dump() << '\n';
      return static_cast<int>(kExitOk);
    };
  });

  std::string ec_file;
  bool ec_brute = false;
  auto* covers = app.add_subcommand("edge-covers", "print the number of edge covers of a bipartite graph");
  covers->add_option("--bipartite", ec_file)->required();
  covers->add_flag("--brute", ec_brute, "enumerate edge subsets instead");
  covers->callback([&] {
    action = [&] {
      const auto b = bipartite_from_json(read_json_file(ec_file), ec_file);
      out << (ec_brute ? brute_count_edge_covers(b) : edge_covers_via_reduction(b).edge_covers) << '\n';
      return static_cast<int>(kExitOk);
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "domset: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    return action();
  } catch (const CLI::ValidationError& e) {
    err << "domset: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SizeGuardExceeded& e) {
    err << "domset: " << e.what() << '\n';
    return kExitGuard;
  } catch (const InvalidInput& e) {
    err << "domset: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return kExitInvalid;
  } catch (const FormatError& e) {
    err << "domset: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "domset: " << e.what() << '\n';
    return kExitInvalid;
  }
}

}  // namespace domset::cli
