// ilsolve command-line harness.
//
//   ilsolve gen    --n 10 --delta 0.01 --seed 7 [-o problem.json]
//   ilsolve solve  -i problem.json [--methods magnitude,nk_hull] [--format json]
//   ilsolve bench  --n 5,10 --delta 0.1,0.01 --count 50 [--paper] [--format csv]
//   ilsolve check  -i problem.json [--samples 5]
//
// Exit codes: 0 ok, 1 usage, 2 verification or certification failure, 3 I/O.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ilsolve/bench/generator.hpp"
#include "ilsolve/bench/problem_io.hpp"
#include "ilsolve/bench/report.hpp"
#include "ilsolve/bench/suite.hpp"
#include "ilsolve/ilsolve.hpp"

namespace {

using namespace ilsolve;
using namespace ilsolve::bench;

enum Exit { kOk = 0, kUsage = 1, kVerification = 2, kIo = 3 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::vector<std::size_t> n{10};
  std::vector<double> delta{0.01};
  std::uint64_t seed = 1;
  std::size_t count = 1;
  std::vector<std::string> methods;
  std::string mode = "cheap";
  std::size_t max_iter = 100;
  double tol = 1e-12;
  std::string format = "table";
  std::string input;
  std::string output;
};

std::vector<Method> selected_methods(const Common& c) {
  std::vector<Method> out;
  if (c.methods.empty()) return {std::begin(kAllMethods), std::end(kAllMethods)};
  for (const std::string& m : c.methods) out.push_back(parse_method(m));
  return out;
}

MethodOptions method_options(const Common& c) {
  MethodOptions o;
  o.mode = c.mode == "exact" ? BoundMode::Exact : BoundMode::Cheap;
  o.gauss_seidel.stop = StoppingRule{c.max_iter, c.tol};
  return o;
}

// Writes to the -o file when given, else stdout.
void emit(const Common& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(c.output, std::ios::binary);
  if (!out) throw IoError("cannot open '" + c.output + "' for writing");
  out << text;
  if (!out) throw IoError("write to '" + c.output + "' failed");
}

// The problem from -i, or instance 0 of the generator flags.
IntervalLinearSystem load_problem(const Common& c) {
  if (c.input.empty()) {
    return generate_instance(GeneratorConfig{c.n.front(), c.delta.front(), c.seed, 1}, 0).raw;
  }
  std::ifstream in(c.input, std::ios::binary);
  if (!in) throw IoError("cannot open '" + c.input + "'");
  return io::read_problem(in);
}

std::string interval_text(const Interval& x) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "[%.17g, %.17g]", x.lo(), x.hi());
  return buf;
}

int cmd_gen(const Common& c) {
  if (c.count > 1 && c.output.empty()) throw CLI::ValidationError("--count > 1 needs -o DIR");
  for (std::size_t k = 0; k < c.count; ++k) {
    const GeneratedInstance inst = generate_instance(GeneratorConfig{c.n.front(), c.delta.front(), c.seed, c.count}, k);
    std::ostringstream text;
    io::write_problem(text, inst.raw);
    if (c.count == 1) {
      emit(c, text.str());
    } else {
      std::filesystem::create_directories(c.output);
      Common one = c;
      one.output = (std::filesystem::path(c.output) / ("instance_" + std::to_string(k) + ".json")).string();
      emit(one, text.str());
    }
  }
  return kOk;
}

int cmd_solve(const Common& c) {
  const IntervalLinearSystem raw = load_problem(c);
  const CertifiedSystem sys = prepare(raw);
  const MethodOptions opts = method_options(c);

  std::optional<IntervalVector> hull;
  try {
    hull = run_method(Method::NkHull, sys).enclosure;
  } catch (const Error&) {
  }

  std::vector<EnclosureReport> reports;
  for (Method m : selected_methods(c)) {
    EnclosureReport r = timed_run(m, sys, opts, 1);
    if (hull) {
      try {
        r.tightness = tightness_ratio(r.enclosure, *hull);
      } catch (const DegenerateHullError&) {
      }
    }
    reports.push_back(std::move(r));
  }

  std::ostringstream out;
  if (c.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : reports)
      j.push_back({{"method", label(r.method)},
                   {"enclosure", io::to_json(r.enclosure)},
                   {"tightness", r.tightness ? nlohmann::json(*r.tightness) : nlohmann::json(nullptr)},
                   {"wall_time_s", r.wall_time},
                   {"iterations", r.iterations}});
    out << j.dump(2) << '\n';
  } else if (c.format == "csv") {
    out << "method,component,lo,hi\r\n";
    for (const auto& r : reports)
      for (std::size_t i = 0; i < r.enclosure.size(); ++i) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g", i, r.enclosure[i].lo(), r.enclosure[i].hi());
        out << label(r.method) << ',' << buf << "\r\n";
      }
  } else {
    out << "# enclosures of the preconditioned system (they contain the solution set of the input)\n";
    for (const auto& r : reports) {
      out << label(r.method) << "  tightness=" << (r.tightness ? format_number(*r.tightness, 8) : "n/a")
          << "  time=" << format_number(r.wall_time, 4) << "s";
      if (r.method == Method::GsIterative) out << "  iterations=" << r.iterations;
      out << '\n';
      for (std::size_t i = 0; i < r.enclosure.size(); ++i) out << "  x" << i + 1 << " = " << interval_text(r.enclosure[i]) << '\n';
    }
  }
  emit(c, out.str());
  return kOk;
}

int cmd_bench(const Common& c, bool paper, std::size_t repeats) {
  std::vector<RowSpec> rows;
  if (paper) {
    rows = paper_rows();
  } else {
    for (std::size_t n : c.n)
      for (double d : c.delta) rows.push_back({n, d});
  }
  SuiteOptions opts;
  opts.method = method_options(c);
  opts.repeats = repeats;
  const std::vector<Method> methods = selected_methods(c);

  std::vector<RowStats> stats;
  for (const RowSpec& row : rows) {
    auto part = run_suite(GeneratorConfig{row.n, row.delta, c.seed, c.count}, methods, opts);
    stats.insert(stats.end(), part.begin(), part.end());
  }

  std::ostringstream out;
  if (c.format == "csv") write_csv(out, stats);
  else if (c.format == "json") out << rows_to_json(stats).dump(2) << '\n';
  else write_text(out, stats);
  emit(c, out.str());
  return kOk;
}

int cmd_check(const Common& c, std::size_t samples) {
  const IntervalLinearSystem raw = load_problem(c);
  const CertifiedSystem sys = prepare(raw);
  const MethodOptions opts = method_options(c);
  std::size_t total = 0;
  std::ostringstream out;
  for (Method m : selected_methods(c)) {
    const MethodOutput r = run_method(m, sys, opts);
    auto rng = instance_stream(c.seed ^ kSpotCheckSalt, 0, static_cast<std::uint64_t>(m));
    const std::size_t escapes = spot_check_escapes(raw, r.enclosure, rng, samples);
    total += escapes;
    out << label(m) << ": " << (escapes == 0 ? "ok" : "ESCAPE") << " (" << escapes << " of " << samples
        << " sampled solutions outside)\n";
  }
  emit(c, out.str());
  return total == 0 ? kOk : kVerification;
}

void add_common(CLI::App* cmd, Common& c, bool generator, bool solver) {
  if (generator) {
    cmd->add_option("--n", c.n, "dimension(s)")->delimiter(',')->check(CLI::PositiveNumber);
    cmd->add_option("--delta", c.delta, "radius of every entry of A")->delimiter(',')->check(CLI::PositiveNumber);
    cmd->add_option("--seed", c.seed, "64-bit seed");
    cmd->add_option("--count", c.count, "instances")->check(CLI::NonNegativeNumber);
  }
  if (solver) {
    cmd->add_option("--methods", c.methods,
                    "krawczyk_limit,gs_iterative,gs_limit,magnitude_gamma0,magnitude,nk_hull")
        ->delimiter(',');
    cmd->add_option("--mode", c.mode, "bound on d for the magnitude method")
        ->check(CLI::IsMember({"cheap", "exact"}));
    cmd->add_option("--max-iter", c.max_iter, "Gauss-Seidel iteration cap");
    cmd->add_option("--tol", c.tol, "relative endpoint change that stops the iteration")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--format", c.format)->check(CLI::IsMember({"table", "csv", "json"}));
  }
  cmd->add_option("-o,--output", c.output, "output file (directory for gen --count > 1)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interval linear systems: enclosures, benchmarks and checks"};
  app.require_subcommand(1);
  Common c;

  auto* gen = app.add_subcommand("gen", "write a random problem file");
  add_common(gen, c, true, false);

  auto* solve = app.add_subcommand("solve", "enclose the solution set of a problem");
  add_common(solve, c, true, true);
  solve->add_option("-i,--input", c.input, "problem file (default: generate from --n/--delta/--seed)");

  bool paper = false;
  std::size_t repeats = 3;
  auto* bench = app.add_subcommand("bench", "time and tightness over random instances");
  add_common(bench, c, true, true);
  bench->add_flag("--paper", paper, "use the (n, delta) rows of the published tables");
  bench->add_option("--repeats", repeats, "timing repetitions per method (median is reported)")
      ->check(CLI::PositiveNumber);

  std::size_t samples = 5;
  auto* check = app.add_subcommand("check", "containment spot check with sampled point systems");
  add_common(check, c, true, true);
  check->add_option("-i,--input", c.input, "problem file (default: generate from --n/--delta/--seed)");
  check->add_option("--samples", samples, "point systems to sample");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) return cmd_gen(c);
    if (*solve) return cmd_solve(c);
    if (*bench) return cmd_bench(c, paper, repeats);
    if (*check) return cmd_check(c, samples);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kVerification;
  }
  return kUsage;
}
