#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "binmat/canonical.hpp"
#include "binmat/enumerate.hpp"
#include "binmat/fibonacci.hpp"
#include "binmat/oracle.hpp"
#include "json.hpp"

// Exit codes: 0 success or all checks pass, 1 verification failure,
// 2 usage error, 3 capacity limit, 4 I/O failure.

namespace {

int default_threads() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

struct GlobalOpts {
  int threads = default_threads();
  bool limit_override = false;
  bool quiet = false;
};

int run_count(const GlobalOpts& g, int n, int k, const std::string& method) {
  const binmat::Dims d(n, k);
  if (method == "canonical") {
    binmat::EnumConfig cfg(d);
    cfg.worker_count = g.threads;
    cfg.limit_override = g.limit_override;
    std::cout << binmat::count_canonical(cfg) << '\n';
  } else if (method == "lambda") {
    std::cout << binmat::count_lambda(d).str() << '\n';
  } else {
    std::cout << binmat::orbit_count(d, g.limit_override) << '\n';
  }
  return 0;
}

int run_list(const GlobalOpts& g, int n, int k, const std::string& format) {
  binmat::EnumConfig cfg(binmat::Dims(n, k));
  cfg.worker_count = g.threads;
  cfg.limit_override = g.limit_override;
  if (format == "tuple") {
    binmat::list_canonical(cfg, [](const binmat::RowTuple& t) {
      std::cout << binmat::to_csv(t) << '\n';
    });
  } else if (format == "matrix") {
    bool first = true;
    binmat::list_canonical(cfg, [&](const binmat::RowTuple& t) {
      if (!first) std::cout << '\n';
      first = false;
      std::cout << binmat::to_ascii(binmat::decode(t));
    });
  } else {
    nlohmann::json doc = nlohmann::json::array();
    binmat::list_canonical(cfg, [&](const binmat::RowTuple& t) {
      doc.push_back(t.rows());
    });
    std::cout << doc.dump(2) << '\n';
  }
  return 0;
}

int run_sequence(const GlobalOpts& g, int k, int n_max,
                 const std::string& b_file, bool json, bool timings,
                 bool no_orbits) {
  binmat::SequenceOptions opts;
  opts.worker_count = g.threads;
  opts.limit_override = g.limit_override;
  opts.with_orbit_counts = !no_orbits;
  const binmat::SequenceTable table = binmat::sequence_table(k, n_max, opts);
  if (!g.quiet) {
    std::cout << (json ? binmat::to_json_string(table, timings)
                       : binmat::to_text(table, timings));
  }
  if (!b_file.empty()) {
    std::ofstream out(b_file);
    if (!out) {
      std::cerr << "error: cannot open " << b_file << " for writing\n";
      return 4;
    }
    binmat::write_b_file(table, out);
    out.flush();
    if (!out) {
      std::cerr << "error: write to " << b_file << " failed\n";
      return 4;
    }
  }
  return 0;
}

int run_fib(const GlobalOpts& g, int k_max, bool json, bool no_orbits) {
  const binmat::RecurrenceReport report =
      binmat::verify_recurrence(k_max, !no_orbits);
  if (!g.quiet) {
    std::cout << (json ? binmat::to_json_string(report)
                       : binmat::to_text(report));
  }
  return report.all_pass ? 0 : 1;
}

int run_compare(const GlobalOpts& g, int n, int k, bool json) {
  const binmat::ComparisonReport report =
      binmat::compare(binmat::Dims(n, k), g.limit_override);
  std::cout << (json ? binmat::to_json_string(report)
                     : binmat::to_text(report));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Canonical n x n binary matrices with k ones per row and column:\n"
      "counting, listing, sequence tables, and verification tools."};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--threads", g.threads,
                 "Worker threads for enumeration (default: hardware)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--limit-override", g.limit_override,
               "Lift the desk-scale order guards");
  app.add_flag("--quiet", g.quiet, "Suppress tables and informational output");

  int n = 0;
  int k = 0;
  int n_max = 0;
  int k_max = 0;
  std::string method = "canonical";
  std::string format = "tuple";
  std::string b_file;
  bool json = false;
  bool timings = false;
  bool no_orbits = false;

  CLI::App* count = app.add_subcommand(
      "count", "Print one number: canonical, member, or orbit count");
  count->fallthrough();
  count->add_option("--n", n, "Matrix order")->required();
  count->add_option("--k", k, "Ones per row and column")->required();
  count->add_option("--method", method, "canonical | lambda | orbit")
      ->check(CLI::IsMember({"canonical", "lambda", "orbit"}));

  CLI::App* list = app.add_subcommand(
      "list", "Stream every canonical element in ascending order");
  list->fallthrough();
  list->add_option("--n", n, "Matrix order")->required();
  list->add_option("--k", k, "Ones per row and column")->required();
  list->add_option("--format", format, "tuple | matrix | json")
      ->check(CLI::IsMember({"tuple", "matrix", "json"}));

  CLI::App* sequence = app.add_subcommand(
      "sequence", "Tabulate counts for one k across n = k..n_max");
  sequence->fallthrough();
  sequence->add_option("--k", k, "Ones per row and column")->required();
  sequence->add_option("--n-max", n_max, "Largest order")->required();
  sequence->add_option("--b-file", b_file,
                       "Also write \"n value\" lines to this path");
  sequence->add_flag("--json", json, "Emit JSON instead of a table");
  sequence->add_flag("--timings", timings, "Include per-row wall time");
  sequence->add_flag("--no-orbits", no_orbits, "Skip the orbit column");

  CLI::App* fibcmd = app.add_subcommand(
      "fib", "Verify the Fibonacci identity for k = 0..k_max");
  fibcmd->fallthrough();
  fibcmd->add_option("--k-max", k_max, "Largest k")->required();
  fibcmd->add_flag("--json", json, "Emit JSON instead of a table");
  fibcmd->add_flag("--no-orbits", no_orbits, "Skip the orbit column");

  CLI::App* compare = app.add_subcommand(
      "compare", "Canonical count versus exhaustive orbit count");
  compare->fallthrough();
  compare->add_option("--n", n, "Matrix order")->required();
  compare->add_option("--k", k, "Ones per row and column")->required();
  compare->add_flag("--json", json, "Emit JSON instead of text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (g.limit_override && !g.quiet) {
    std::cerr << "warning: order guards lifted; large cases may take long\n";
  }

  try {
    if (count->parsed()) return run_count(g, n, k, method);
    if (list->parsed()) return run_list(g, n, k, format);
    if (sequence->parsed()) {
      return run_sequence(g, k, n_max, b_file, json, timings, no_orbits);
    }
    if (fibcmd->parsed()) return run_fib(g, k_max, json, no_orbits);
    if (compare->parsed()) return run_compare(g, n, k, json);
  } catch (const binmat::capacity_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
