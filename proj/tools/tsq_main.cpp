// tsq: Tsallis entropy toolkit front end.
//
// Subcommands:
//   entropy  S_q of each input state for each q
//   bound    continuity-bound report for a pair of states
//   sweep    seeded Monte Carlo tightness sweep over a (q, d) grid, CSV/JSON
//   axioms   randomized residual suites for the characterizing identities
//   sample   draw a random density matrix and write it as matrix JSON
//
// Exit codes: 0 success; 1 input error; 2 bound hypothesis not met
// (report still printed); 3 axioms/sweep tolerance violation.
#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tsallis/axioms.hpp"
#include "tsallis/density.hpp"
#include "tsallis/entropy.hpp"
#include "tsallis/fannes.hpp"
#include "tsallis/format.hpp"
#include "tsallis/matrix_io.hpp"
#include "tsallis/qfunc.hpp"

namespace {

using namespace tsallis;

const std::vector<double> kDefaultQ{0.25, 0.5, 0.9, 1.0, 1.1, 1.5, 2.0};
const std::vector<int> kDefaultDims{2, 3, 4, 8};

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

const char* json_bool(bool b) { return b ? "true" : "false"; }

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open file for writing: " + path);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw std::runtime_error("write failed: " + path);
}

DensityOperator load_state(const std::string& path) {
  const ComplexMatrix raw = load_matrix_json(path);
  DensityCheck check = validate_density(raw);
  if (!check.ok()) throw std::runtime_error(path + ": " + check.error);
  return std::move(*check.state);
}

int run_entropy(const std::vector<std::string>& inputs, const std::vector<double>& qs,
                const std::string& format, const std::string& out_path) {
  std::ostringstream out;
  if (format == "csv") {
    out << "input,q,value,dim_bound\n";
    for (const std::string& path : inputs) {
      const DensityOperator rho = load_state(path);
      for (double qv : qs) {
        const EntropyValue s = tsallis_entropy(rho, QParam(qv));
        out << path << ',' << format_num(qv) << ',' << format_num(s.value) << ','
            << format_num(s.dim_bound) << '\n';
      }
    }
  } else {
    out << "[\n";
    bool first = true;
    for (const std::string& path : inputs) {
      const DensityOperator rho = load_state(path);
      for (double qv : qs) {
        const EntropyValue s = tsallis_entropy(rho, QParam(qv));
        if (!first) out << ",\n";
        first = false;
        out << "  {\"input\": \"" << json_escape(path) << "\", \"q\": "
            << format_num(qv) << ", \"value\": " << format_num(s.value)
            << ", \"dim_bound\": " << format_num(s.dim_bound) << "}";
      }
    }
    out << "\n]\n";
  }
  write_output(out_path, out.str());
  return 0;
}

void append_report_json(std::ostringstream& out, const BoundReport& r) {
  out << "  {\"q\": " << format_num(r.q) << ", \"d\": " << r.d
      << ", \"epsilon\": " << format_num(r.epsilon)
      << ", \"eigen_gap_sum\": " << format_num(r.eigen_gap_sum)
      << ", \"radius\": " << format_num(r.radius)
      << ", \"hypothesis_met\": " << json_bool(r.hypothesis_met)
      << ", \"lhs\": " << format_num(r.lhs)
      << ", \"eigenwise_rhs\": " << format_num(r.eigenwise_rhs)
      << ", \"gap_rhs\": " << format_num(r.gap_rhs)
      << ", \"rhs\": " << format_num(r.rhs)
      << ", \"margin\": " << format_num(r.margin) << "}";
}

int run_bound(const std::vector<std::string>& inputs, const std::vector<double>& qs,
              const std::string& format, const std::string& out_path) {
  const DensityOperator rho1 = load_state(inputs[0]);
  const DensityOperator rho2 = load_state(inputs[1]);

  std::vector<BoundReport> reports;
  reports.reserve(qs.size());
  for (double qv : qs) reports.push_back(check_fannes(rho1, rho2, QParam(qv)));

  std::ostringstream out;
  if (format == "csv") {
    out << "q,d,epsilon,eigen_gap_sum,radius,hypothesis_met,lhs,eigenwise_rhs,"
           "gap_rhs,rhs,margin\n";
    for (const BoundReport& r : reports) {
      out << format_num(r.q) << ',' << r.d << ',' << format_num(r.epsilon) << ','
          << format_num(r.eigen_gap_sum) << ',' << format_num(r.radius) << ','
          << json_bool(r.hypothesis_met) << ',' << format_num(r.lhs) << ','
          << format_num(r.eigenwise_rhs) << ',' << format_num(r.gap_rhs) << ','
          << format_num(r.rhs) << ',' << format_num(r.margin) << '\n';
    }
  } else {
    out << "[\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
      if (i) out << ",\n";
      append_report_json(out, reports[i]);
    }
    out << "\n]\n";
  }
  write_output(out_path, out.str());

  for (const BoundReport& r : reports)
    if (!r.hypothesis_met) return 2;
  return 0;
}

int run_sweep_cmd(const std::vector<double>& qs, const std::vector<int>& dims,
                  int samples, std::uint64_t seed, const std::string& mode,
                  const std::string& format, const std::string& out_path) {
  SweepConfig cfg;
  cfg.q_grid = qs;
  cfg.d_grid = dims;
  cfg.samples = samples;
  cfg.seed = seed;
  cfg.mode = mode == "beyond_hypothesis" ? SweepMode::BeyondHypothesis
                                         : SweepMode::WithinHypothesis;
  const TightnessTable table = run_sweep(cfg);

  std::string text;
  if (format == "json") {
    std::ostringstream out;
    out << "[\n";
    for (std::size_t i = 0; i < table.cells.size(); ++i) {
      const SweepCell& c = table.cells[i];
      if (i) out << ",\n";
      out << "  {\"q\": " << format_num(c.q) << ", \"d\": " << c.d
          << ", \"samples\": " << c.samples
          << ", \"max_ratio\": " << format_num(c.max_ratio)
          << ", \"min_margin\": " << format_num(c.min_margin)
          << ", \"extremal_seed\": " << c.extremal_seed
          << ", \"violations\": " << c.violations << "}";
    }
    out << "\n]\n";
    text = out.str();
  } else {
    text = to_csv(table);
  }
  write_output(out_path, text);

  if (cfg.mode == SweepMode::WithinHypothesis) {
    for (const SweepCell& c : table.cells)
      if (c.violations > 0) return 3;
  }
  return 0;
}

int run_axioms_cmd(int samples, std::uint64_t seed, const std::string& format,
                   const std::string& out_path) {
  const std::vector<AxiomSuiteResult> results = run_axiom_suites(samples, seed);

  std::ostringstream out;
  if (format == "csv") {
    out << "check_name,instances,max_residual,tolerance,pass\n";
    for (const AxiomSuiteResult& r : results)
      out << r.check_name << ',' << r.instances << ',' << format_num(r.max_residual)
          << ',' << format_num(r.tolerance) << ',' << json_bool(r.pass) << '\n';
  } else {
    out << "[\n";
    for (std::size_t i = 0; i < results.size(); ++i) {
      const AxiomSuiteResult& r = results[i];
      if (i) out << ",\n";
      out << "  {\"check_name\": \"" << json_escape(r.check_name)
          << "\", \"instances\": " << r.instances
          << ", \"max_residual\": " << format_num(r.max_residual)
          << ", \"tolerance\": " << format_num(r.tolerance)
          << ", \"pass\": " << json_bool(r.pass) << "}";
    }
    out << "\n]\n";
  }
  write_output(out_path, out.str());

  for (const AxiomSuiteResult& r : results)
    if (!r.pass) return 3;
  return 0;
}

int run_sample(int dim, std::uint64_t seed, const std::string& out_path) {
  const DensityOperator rho = sample_density(dim, seed);
  write_output(out_path, matrix_to_json(rho.matrix().matrix()));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tsallis entropy toolkit: entropies, continuity bounds, sweeps, axiom checks"};
  app.require_subcommand(1);

  std::vector<double> qs;
  std::vector<int> dims;
  std::vector<std::string> inputs;
  int samples = 1000;
  int dim = 2;
  std::uint64_t seed = 42;
  std::string mode = "within_hypothesis";
  std::string format;
  std::string out_path;

  const auto add_q = [&qs](CLI::App* cmd) {
    cmd->add_option("--q", qs, "entropic index (repeatable; default grid "
                               "0.25 0.5 0.9 1.0 1.1 1.5 2.0)");
  };
  const auto add_out = [&out_path](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "output file (default: stdout)");
  };
  const auto add_format = [&format](CLI::App* cmd, const char* dflt) {
    cmd->add_option("--format", format, std::string("output format (default: ") + dflt + ")")
        ->check(CLI::IsMember({"csv", "json"}));
  };

  CLI::App* entropy_cmd =
      app.add_subcommand("entropy", "compute S_q for each input state and q");
  entropy_cmd->add_option("inputs", inputs, "matrix JSON files")
      ->required()
      ->expected(1, -1);
  add_q(entropy_cmd);
  add_format(entropy_cmd, "json");
  add_out(entropy_cmd);

  CLI::App* bound_cmd =
      app.add_subcommand("bound", "continuity-bound report for a pair of states");
  bound_cmd->add_option("inputs", inputs, "exactly two matrix JSON files")
      ->required()
      ->expected(2);
  add_q(bound_cmd);
  add_format(bound_cmd, "json");
  add_out(bound_cmd);

  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "Monte Carlo tightness sweep over a (q, d) grid");
  add_q(sweep_cmd);
  sweep_cmd->add_option("--dim", dims, "state dimension (repeatable; default 2 3 4 8)");
  sweep_cmd->add_option("--samples", samples, "pairs per (q, d) cell (default 1000)");
  sweep_cmd->add_option("--seed", seed, "master seed (default 42)");
  sweep_cmd->add_option("--mode", mode, "within_hypothesis | beyond_hypothesis")
      ->check(CLI::IsMember({"within_hypothesis", "beyond_hypothesis"}));
  add_format(sweep_cmd, "csv");
  add_out(sweep_cmd);

  CLI::App* axioms_cmd =
      app.add_subcommand("axioms", "randomized residual suites, q drawn from (0, 2]");
  axioms_cmd->add_option("--samples", samples, "instances per check (default 1000)");
  axioms_cmd->add_option("--seed", seed, "master seed (default 42)");
  add_format(axioms_cmd, "json");
  add_out(axioms_cmd);

  CLI::App* sample_cmd =
      app.add_subcommand("sample", "draw a random density matrix as matrix JSON");
  sample_cmd->add_option("--dim", dim, "state dimension (default 2)");
  sample_cmd->add_option("--seed", seed, "RNG seed (default 42)");
  add_out(sample_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help or the parse error
    return code == 0 ? 0 : 1;
  }

  if (qs.empty()) qs = kDefaultQ;
  if (dims.empty()) dims = kDefaultDims;

  try {
    if (entropy_cmd->parsed()) {
      if (format.empty()) format = "json";
      return run_entropy(inputs, qs, format, out_path);
    }
    if (bound_cmd->parsed()) {
      if (format.empty()) format = "json";
      return run_bound(inputs, qs, format, out_path);
    }
    if (sweep_cmd->parsed()) {
      if (format.empty()) format = "csv";
      return run_sweep_cmd(qs, dims, samples, seed, mode, format, out_path);
    }
    if (axioms_cmd->parsed()) {
      if (format.empty()) format = "json";
      return run_axioms_cmd(samples, seed, format, out_path);
    }
    if (sample_cmd->parsed()) return run_sample(dim, seed, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
