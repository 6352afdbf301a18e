#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "cliquecover/collection.hpp"
#include "cliquecover/counting.hpp"
#include "cliquecover/families.hpp"
#include "cliquecover/oracle.hpp"
#include "cliquecover/partition.hpp"
#include "cliquecover/quotient.hpp"
#include "cliquecover/signatures.hpp"

namespace cliquecover::cli {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream stream(text);
  while (std::getline(stream, item, ',')) out.push_back(item);
  return out;
}

struct Options {
  std::string input_path = "-";
  std::string input_format = "lines";
  std::string names_csv;
  int max_cliques = kDefaultMaxCliques;
};

struct Session {
  CliqueCollection collection;
  GammaPartition partition;
  std::vector<std::string> names;  // per clique, display only
};

Session open_session(const Options& opt, std::istream& in) {
  const InputFormat format =
      opt.input_format == "json" ? InputFormat::kJson : InputFormat::kLines;
  CliqueCollection collection = [&] {
    if (opt.input_path == "-") return CliqueCollection::load(in, format);
    std::ifstream file(opt.input_path);
    if (!file) {
      throw std::invalid_argument("cannot read input file: " + opt.input_path);
    }
    return CliqueCollection::load(file, format);
  }();

  std::vector<std::string> names;
  if (!opt.names_csv.empty()) {
    names = split_csv(opt.names_csv);
    if (static_cast<int>(names.size()) != collection.clique_count()) {
      throw std::invalid_argument("--names must list exactly one name per clique");
    }
  } else {
    for (int j = 1; j <= collection.clique_count(); ++j) {
      names.push_back(std::to_string(j));
    }
  }

  GammaPartition partition = GammaPartition::build(collection, opt.max_cliques);
  return Session{std::move(collection), std::move(partition), std::move(names)};
}

json index_set_names(IndexSet J, const std::vector<std::string>& names) {
  json out = json::array();
  for (int j : J.indices()) out.push_back(names[static_cast<std::size_t>(j)]);
  return out;
}

json node_labels(const std::vector<int>& nodes, const CliqueCollection& c) {
  json out = json::array();
  for (int x : nodes) out.push_back(c.label(x));
  return out;
}

json coefficient_strings(const CountPolynomial& p) {
  json out = json::array();
  for (int k = 0; k <= p.degree(); ++k) out.push_back(p.coefficient(k).str());
  return out;
}

std::vector<int> parse_nodes(const Session& s, const std::string& csv) {
  const auto labels = split_csv(csv);
  if (labels.empty()) throw std::invalid_argument("--nodes must list at least one label");
  return s.collection.node_ids(labels);
}

void emit(std::ostream& out, const json& doc) { out << doc.dump() << '\n'; }

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"clique-cover combinatorics: cell partitions, quotients and exact clique counts"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("-i,--input", opt.input_path, "input file, '-' for stdin")
      ->capture_default_str();
  app.add_option("--format", opt.input_format, "input format")
      ->check(CLI::IsMember({"lines", "json"}))
      ->capture_default_str();
  app.add_option("--names", opt.names_csv, "comma-separated display names, one per clique");
  app.add_option("--max-cliques", opt.max_cliques,
                 "cap on the clique count m (partition work scales with 2^m)")
      ->capture_default_str();

  auto* gamma_cmd = app.add_subcommand("gamma", "print the cell partition");

  auto* quotient_cmd = app.add_subcommand("quotient", "print the quotient graph");
  std::string quotient_format = "json";
  quotient_cmd->add_option("--format", quotient_format, "output format")
      ->check(CLI::IsMember({"json", "dot", "csv"}))
      ->capture_default_str();

  auto* families_cmd =
      app.add_subcommand("families", "enumerate maximal intersecting families");
  bool families_maximal = false;
  int families_m = 0;
  int families_cap = kDefaultMaxFamilyUniverse;
  families_cmd->add_flag("--maximal", families_maximal, "enumerate maximal families");
  families_cmd->add_option("-m", families_m, "universe size")->required();
  families_cmd->add_option("--max-universe", families_cap,
                           "cap on the universe size for enumeration")
      ->capture_default_str();

  auto* count_cmd = app.add_subcommand("count", "clique and edge counts");
  int count_r = -1;
  bool count_all = false;
  bool count_nontrivial = false;
  bool count_edges = false;
  count_cmd->add_option("-r", count_r, "count cliques of exactly this size");
  count_cmd->add_flag("--all", count_all, "total cliques of size >= 1");
  count_cmd->add_flag("--nontrivial", count_nontrivial, "total cliques of size >= 3");
  count_cmd->add_flag("--edges", count_edges, "edge count by both cell formulas");

  auto* maximal_cmd = app.add_subcommand("maximal", "list all maximal cliques");

  auto* containing_cmd =
      app.add_subcommand("containing", "count cliques containing a seed clique");
  std::string containing_nodes;
  containing_cmd->add_option("--nodes", containing_nodes, "comma-separated node labels")
      ->required();

  auto* extent_cmd =
      app.add_subcommand("extent", "union of the maximal cliques containing a seed");
  std::string extent_nodes;
  extent_cmd->add_option("--nodes", extent_nodes, "comma-separated node labels")
      ->required();

  auto* gf_cmd = app.add_subcommand("gf", "clique-count generating function");

  auto* connected_cmd =
      app.add_subcommand("connected", "connected induced-subgraph counts");
  bool connected_gf = false;
  connected_cmd->add_flag("--gf", connected_gf,
                          "print the size generating function instead of the signature count");

  auto* clique_number_cmd = app.add_subcommand("clique-number", "largest clique size");

  auto* verify_cmd =
      app.add_subcommand("verify", "cross-check formulas against brute force");
  std::uint64_t verify_seed = 1;
  int verify_instances = 50;
  verify_cmd->add_option("--seed", verify_seed, "random seed")->capture_default_str();
  verify_cmd->add_option("--instances", verify_instances, "number of random instances")
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*families_cmd) {
      if (!families_maximal) {
        throw std::invalid_argument("families requires --maximal");
      }
      json fams = json::array();
      long long count = 0;
      for_each_maximal_intersecting(
          families_m,
          [&](const Family& f) {
            json members = json::array();
            for (IndexSet J : f.members()) {
              json indices = json::array();
              for (int j : J.indices()) indices.push_back(j + 1);
              members.push_back(std::move(indices));
            }
            fams.push_back(std::move(members));
            ++count;
          },
          families_cap);
      emit(out, json{{"m", families_m}, {"count", count}, {"families", std::move(fams)}});
      return kExitOk;
    }

    if (*verify_cmd) {
      const oracle::OracleReport report =
          oracle::run_verification(verify_seed, verify_instances);
      json checks = json::array();
      for (const auto& check : report.checks) {
        checks.push_back(json{{"name", check.name},
                              {"formula_value", check.formula_value},
                              {"oracle_value", check.oracle_value},
                              {"pass", check.pass}});
      }
      emit(out, json{{"seed", report.seed},
                     {"instances", report.instances},
                     {"all_pass", report.all_pass()},
                     {"checks", std::move(checks)}});
      return report.all_pass() ? kExitOk : kExitVerificationFailed;
    }

    const Session s = open_session(opt, in);

    if (*gamma_cmd) {
      json cells = json::array();
      for (const auto& cell : s.partition.cells()) {
        cells.push_back(json{{"J", index_set_names(cell.J, s.names)},
                             {"nodes", node_labels(cell.nodes, s.collection)},
                             {"gamma", cell.gamma()}});
      }
      emit(out, json{{"cells", std::move(cells)}});
    } else if (*quotient_cmd) {
      const QuotientGraph q = quotient_matrix(s.partition);
      const QuotientFormat format = quotient_format == "dot"   ? QuotientFormat::kDot
                                    : quotient_format == "csv" ? QuotientFormat::kCsv
                                                               : QuotientFormat::kJson;
      out << export_quotient(q, format, s.names);
      if (format == QuotientFormat::kJson) out << '\n';
    } else if (*count_cmd) {
      const int modes = (count_r >= 0) + count_all + count_nontrivial + count_edges;
      if (modes != 1) {
        throw std::invalid_argument("count requires exactly one of -r, --all, --nontrivial, --edges");
      }
      if (count_r >= 0) {
        emit(out, json{{"r", count_r},
                       {"count", count_r_cliques_pie(s.collection, count_r, opt.max_cliques).str()}});
      } else if (count_all) {
        emit(out, json{{"mode", "all"}, {"count", count_all_cliques(s.partition).str()}});
      } else if (count_nontrivial) {
        emit(out, json{{"mode", "nontrivial"},
                       {"count", count_nontrivial_cliques(s.collection, opt.max_cliques).str()}});
      } else {
        const BigInt by_cells = count_edges_cell_formula(s.partition);
        const BigInt by_degree = count_edges_degree(s.partition);
        if (by_cells != by_degree) {
          throw std::logic_error("edge formulas disagree");
        }
        emit(out, json{{"mode", "edges"}, {"count", by_cells.str()}});
      }
    } else if (*maximal_cmd) {
      auto cliques = enumerate_maximal_cliques(s.partition);
      // order for display: size descending, then node labels
      std::vector<std::pair<std::vector<std::string>, const MaximalClique*>> keyed;
      for (const auto& mc : cliques) {
        std::vector<std::string> labels;
        for (int x : mc.nodes) labels.push_back(s.collection.label(x));
        keyed.emplace_back(std::move(labels), &mc);
      }
      std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() > b.first.size();
        return a.first < b.first;
      });
      json list = json::array();
      for (const auto& [labels, mc] : keyed) {
        json support = json::array();
        for (IndexSet J : mc->support.members()) {
          support.push_back(index_set_names(J, s.names));
        }
        list.push_back(json{{"nodes", labels}, {"support", std::move(support)}});
      }
      emit(out, json{{"maximal_cliques", std::move(list)}});
    } else if (*containing_cmd) {
      const std::vector<int> H = parse_nodes(s, containing_nodes);
      emit(out, json{{"nodes", node_labels(H, s.collection)},
                     {"count", count_cliques_containing(s.partition, H).str()}});
    } else if (*extent_cmd) {
      const std::vector<int> H = parse_nodes(s, extent_nodes);
      emit(out, json{{"nodes", node_labels(H, s.collection)},
                     {"extent", node_labels(clique_extent(s.partition, H), s.collection)}});
    } else if (*gf_cmd) {
      emit(out, json{{"coefficients", coefficient_strings(clique_gf(s.partition))}});
    } else if (*connected_cmd) {
      if (connected_gf) {
        emit(out, json{{"coefficients", coefficient_strings(connected_subgraph_gf(s.partition))}});
      } else {
        emit(out, json{{"connected_signatures", count_connected_signatures(s.partition).str()}});
      }
    } else if (*clique_number_cmd) {
      emit(out, json{{"clique_number", clique_number(s.partition)}});
    }
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace cliquecover::cli
