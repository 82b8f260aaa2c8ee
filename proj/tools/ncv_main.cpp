#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ncv/errors.hpp"
#include "ncv/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

ncv::OutputFormat parse_format(const std::string& name) {
  if (name == "text") return ncv::OutputFormat::kText;
  if (name == "json") return ncv::OutputFormat::kJson;
  if (name == "csv") return ncv::OutputFormat::kCsv;
  throw CLI::ValidationError("--format", "expected text, json or csv");
}

int emit(const ncv::Report& report, ncv::OutputFormat format) {
  std::cout << report.render(format);
  return report.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact negative-cycle-vector toolkit for signed graphs"};
  app.require_subcommand(1);
  app.fallthrough();

  ncv::RunConfig config;
  std::string format_name = "text";
  app.add_option("--format", format_name, "output format: text, json or csv")
      ->capture_default_str();
  app.add_option("--workers", config.workers, "worker threads for batch and rank steps")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--cache-dir", config.cache_dir, "cycle catalog cache directory");
  app.add_option("--budget-max-n", config.max_n, "largest vertex count accepted")
      ->capture_default_str();
  app.add_option("--budget-max-edges", config.max_edges, "largest edge count accepted")
      ->capture_default_str();
  app.add_option("--budget-max-cycles", config.max_cycles, "cycle enumeration cap")
      ->capture_default_str();
  app.add_option("--budget-max-reps", config.max_class_reps,
                 "switching-class representative cap")
      ->capture_default_str();
  app.add_option("--budget-max-subset", config.max_subset,
                 "largest negative set for inclusion-exclusion")
      ->capture_default_str();

  auto* analyze = app.add_subcommand("analyze", "full pipeline on one graph");
  std::string graph_spec;
  ncv::AnalyzeOptions analyze_options;
  analyze->add_option("graph", graph_spec, "graph descriptor, e.g. K5, K3,4, petersen")
      ->required();
  analyze->add_option("--matching", analyze_options.matching,
                      "auto, kind-K, or edges:0-1,2-3,...")
      ->capture_default_str();
  analyze->add_flag("--dim", analyze_options.force_dim,
                    "compute the exhaustive dimension even when over budget would fail");

  auto* reproduce = app.add_subcommand("reproduce", "recompute a stored reference table");
  std::string table_id;
  reproduce->add_option("id", table_id, "one of: k3 k4 k5 k6 fig1 fig2-k8 petersen prism cube")
      ->required();

  auto* conjecture = app.add_subcommand("conjecture", "dim vs spectrum over a graph6 corpus");
  std::string corpus_path;
  conjecture->add_option("corpus", corpus_path, "file of graph6 lines, or - for stdin")
      ->required();

  auto* formulas = app.add_subcommand("formulas", "closed formulas vs enumeration");
  std::string family_spec;
  formulas->add_option("family", family_spec, "K<n> or K<p>,<q>")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const ncv::OutputFormat format = parse_format(format_name);
    if (*analyze) return emit(ncv::cmd_analyze(graph_spec, analyze_options, config), format);
    if (*reproduce) return emit(ncv::cmd_reproduce(table_id, config), format);
    if (*conjecture) {
      if (corpus_path == "-") return emit(ncv::cmd_conjecture(std::cin, config), format);
      std::ifstream in(corpus_path);
      if (!in) {
        std::cerr << "ncv: cannot open corpus file: " << corpus_path << "\n";
        return kExitUsage;
      }
      return emit(ncv::cmd_conjecture(in, config), format);
    }
    if (*formulas) return emit(ncv::cmd_formulas(family_spec, config), format);
  } catch (const ncv::BudgetError& e) {
    std::cerr << "ncv: budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ncv::UnknownNameError& e) {
    std::cerr << "ncv: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ncv::FormatError& e) {
    std::cerr << "ncv: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ncv::DomainError& e) {
    std::cerr << "ncv: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "ncv: internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
