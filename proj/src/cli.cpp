#include "treegray/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "treegray/edge_exchange.hpp"
#include "treegray/mixed_radix_gray.hpp"
#include "treegray/pivot_complete.hpp"
#include "treegray/verification.hpp"

namespace treegray {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct GraphOptions {
  std::string graph;
  std::string edges;
  std::string mode;  // empty: pivot for complete graphs, edge-exchange otherwise
  std::string start = "scan";
  bool general = false;
};

struct Plan {
  GraphSpec spec;
  Graph graph;
  bool pivot = false;
  bool bipartite_fast = false;
  StartRule start = StartRule::Scan;
};

void add_graph_flags(CLI::App* cmd, GraphOptions& o, bool with_mode) {
  cmd->add_option("--graph", o.graph, "complete:N | bipartite:M,N | fan:N | wheel:N | petersen | custom:N")->required();
  cmd->add_option("--edges", o.edges, "edge list for custom graphs, e.g. \"1,2; 2,3\"");
  if (!with_mode) return;
  cmd->add_option("--mode", o.mode, "pivot (complete graphs) or edge-exchange")
      ->check(CLI::IsMember({"pivot", "edge-exchange"}));
  cmd->add_option("--start", o.start, "first tree for the general generator")->check(CLI::IsMember({"scan", "dfs"}));
  cmd->add_flag("--general", o.general, "run complete bipartite graphs through the general generator");
}

Plan make_plan(const GraphOptions& o) {
  Plan plan;
  plan.spec = GraphSpec::parse(o.graph, o.edges);
  plan.graph = plan.spec.build();
  const bool complete = plan.spec.family == GraphFamily::Complete;
  plan.pivot = o.mode.empty() ? complete : o.mode == "pivot";
  if (plan.pivot && !complete) throw UsageError("pivot mode needs a complete graph");
  plan.bipartite_fast = !plan.pivot && plan.spec.family == GraphFamily::Bipartite && !o.general;
  plan.start = o.start == "dfs" ? StartRule::Dfs : StartRule::Scan;
  return plan;
}

GenerationStats generate(const Plan& plan, const TreeVisitor& visit) {
  if (plan.pivot) return gen_pivot_complete(plan.spec.n, visit);
  if (plan.bipartite_fast) return gen_bipartite(plan.spec.m, plan.spec.n, visit);
  EdgeExchangeOptions options;
  options.start = plan.start;
  return gen_edge_exchange(plan.graph, visit, options);
}

std::string edge_text(const Edge& e) { return std::to_string(e.u) + "," + std::to_string(e.v); }

std::vector<int> parse_digit_list(const std::string& text) {
  std::vector<int> out;
  if (text.find(',') != std::string::npos) {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        out.push_back(std::stoi(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::logic_error&) {
        throw UsageError("invalid digit '" + item + "'");
      }
    }
  } else {
    for (char c : text) {
      const int d = char_digit(c);
      if (d < 0) throw UsageError(std::string("invalid digit '") + c + "'");
      out.push_back(d);
    }
  }
  return out;
}

std::vector<std::string> read_listing(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read listing file '" + path + "'");
  std::vector<std::string> out;
  std::string token;
  while (in >> token) {
    while (!token.empty() && token.back() == ',') token.pop_back();
    if (!token.empty()) out.push_back(token);
  }
  return out;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gray codes for spanning trees"};
  app.name("treegray");
  app.require_subcommand(1);

  GraphOptions gen_opts;
  std::string format = "compact";
  bool deltas = false;
  std::uint64_t limit = 0;
  auto* gen = app.add_subcommand("gen", "list spanning trees, one per line");
  add_graph_flags(gen, gen_opts, true);
  gen->add_option("--format", format, "compact | edges | dot")->check(CLI::IsMember({"compact", "edges", "dot"}));
  gen->add_flag("--deltas", deltas, "append the removed and added edge to each line");
  gen->add_option("--limit", limit, "stop after N trees (0 = all)");

  GraphOptions count_opts;
  auto* count = app.add_subcommand("count", "number of spanning trees by the matrix-tree theorem");
  add_graph_flags(count, count_opts, false);

  GraphOptions verify_opts;
  std::string listing_path;
  auto* verify = app.add_subcommand("verify", "generate (or read) a listing and validate it");
  add_graph_flags(verify, verify_opts, true);
  verify->add_option("--listing", listing_path, "validate compact strings from this file instead of generating");

  GraphOptions bench_opts;
  auto* bench = app.add_subcommand("bench", "time a full generation run without output");
  add_graph_flags(bench, bench_opts, true);

  std::string maxvals_text;
  std::string start_text;
  bool gray_deltas = false;
  auto* gray = app.add_subcommand("graycode", "reflectable Gray code over mixed-radix strings");
  gray->add_option("--maxvals", maxvals_text, "largest digit per position, e.g. 2,2,2,2 or 2222")->required();
  gray->add_option("--start", start_text, "start string, e.g. 0120")->required();
  gray->add_flag("--deltas", gray_deltas, "append the changed positions (0-based)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (*gen) {
      const Plan plan = make_plan(gen_opts);
      generate(plan, [&](const TransitionEvent& ev) {
        std::string swap;
        if (deltas && ev.change) swap = "-" + edge_text(ev.change->removed) + " +" + edge_text(ev.change->added);
        if (format == "dot") {
          if (!swap.empty()) out << "// " << swap << '\n';
          out << format_dot(ev.tree, "T" + std::to_string(ev.index + 1));
        } else {
          out << (format == "compact" ? compact_encode(ev.tree) : format_parent_links(ev.tree));
          if (!swap.empty()) out << '\t' << swap;
          out << '\n';
        }
        return limit == 0 || ev.index + 1 < limit;
      });
      return 0;
    }

    if (*count) {
      const GraphSpec spec = GraphSpec::parse(count_opts.graph, count_opts.edges);
      out << count_matrix_tree(spec.build()).str() << '\n';
      return 0;
    }

    if (*verify) {
      const Plan plan = make_plan(verify_opts);
      ListingValidator validator(plan.graph, plan.pivot ? ListingMode::Pivot : ListingMode::EdgeExchange);
      if (listing_path.empty()) {
        generate(plan, [&](const TransitionEvent& ev) {
          validator.add(ev.tree);
          return true;
        });
      } else {
        for (const std::string& s : read_listing(listing_path)) {
          if (static_cast<int>(s.size()) != plan.graph.order() - 1) {
            throw UsageError("'" + s + "' does not encode a tree on " + std::to_string(plan.graph.order()) +
                             " vertices");
          }
          validator.add(compact_decode(s, plan.graph.order()));
        }
      }
      const ListingReport report = validator.finish();
      out << report.to_text();
      return report.passed() ? 0 : 1;
    }

    if (*bench) {
      const Plan plan = make_plan(bench_opts);
      const auto t0 = std::chrono::steady_clock::now();
      const GenerationStats stats = generate(plan, nullptr);
      const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      out << "trees: " << stats.trees << '\n';
      out << "seconds: " << std::fixed << std::setprecision(6) << seconds << '\n';
      out << "trees_per_second: " << std::setprecision(0) << (seconds > 0 ? stats.trees / seconds : 0.0) << '\n';
      out << "work_per_tree: " << std::setprecision(3) << stats.work_per_tree() << '\n';
      return 0;
    }

    if (*gray) {
      const std::vector<int> maxvals = parse_digit_list(maxvals_text);
      const std::vector<int> start = parse_digit_list(start_text);
      MixedRadixGray g(maxvals, start);
      while (g.next()) {
        for (int d : g.digits()) out << digit_char(d);
        if (gray_deltas) {
          out << '\t';
          for (std::size_t i = 0; i < g.delta().size(); ++i) out << (i ? "," : "") << g.delta()[i];
        }
        out << '\n';
      }
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ConnectivityError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace treegray
