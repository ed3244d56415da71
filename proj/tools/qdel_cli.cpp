// Copyright 2026 The qdel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// qdel command line: regenerates the fidelity tables, evaluates the
// deleter + transformer machine, averages fidelities and runs the
// verification suite. Talks to the library only through qdel.h.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or validation error.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qdel/qdel.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OutputOptions {
  std::string format = "csv";
  int precision = 4;
  std::string output = "-";

  char delimiter() const { return format == "tsv" ? '\t' : ','; }
};

std::string fixed(double v, int precision) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(precision);
  os << v;
  std::string s = os.str();
  // "-0.0000" carries no information beyond "0.0000".
  if (s.front() == '-' &&
      s.find_first_not_of("-0.") == std::string::npos) {
    s.erase(0, 1);
  }
  return s;
}

std::string sci(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

class Table {
 public:
  explicit Table(char delimiter) : delim_(delimiter) {}

  void row(const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out_ << delim_;
      out_ << quote(fields[i]);
    }
    out_ << '\n';
  }

  void comment(const std::string& line) { out_ << "# " << line << '\n'; }

  std::string str() const { return out_.str(); }

 private:
  std::string quote(const std::string& f) const {
    if (f.find_first_of(std::string{delim_, '"', '\n'}) == std::string::npos) {
      return f;
    }
    std::string q = "\"";
    for (char c : f) {
      if (c == '"') q += '"';
      q += c;
    }
    return q + '"';
  }

  char delim_;
  std::ostringstream out_;
};

void write_output(const OutputOptions& o, const std::string& text) {
  if (o.output == "-") {
    std::cout << text << std::flush;
    if (!std::cout) throw std::runtime_error("failed writing standard output");
    return;
  }
  std::ofstream file(o.output, std::ios::binary | std::ios::trunc);
  if (!file) {
    throw std::runtime_error("cannot open output '" + o.output +
                             "' for writing");
  }
  file << text;
  file.close();
  if (!file) throw std::runtime_error("failed writing '" + o.output + "'");
}

void check(qdel_status status, const char* what) {
  if (status != QDEL_OK) {
    throw std::runtime_error(std::string(what) + ": " +
                             qdel_status_string(status) + ": " +
                             qdel_last_error_message());
  }
}

/// Validates typed amplitudes against `tol` and renormalizes them exactly
/// once before they reach the library.
qdel_blank blank_from_cli(double m1, double m2, double tol) {
  const double norm_sq = m1 * m1 + m2 * m2;
  const double dev = std::abs(norm_sq - 1.0);
  if (!(dev <= tol)) {
    throw UsageError("m1^2 + m2^2 = " + fixed(norm_sq, 12) +
                     " violates m1^2 + m2^2 = 1 (deviation " + sci(dev) +
                     ", tolerance " + sci(tol) + ")");
  }
  const double n = std::sqrt(norm_sq);
  const qdel_blank blank{m1 / n, {m2 / n, 0.0}};
  if (n != 1.0) {
    std::cerr << "# renormalized blank: m1 " << fixed(m1, 12) << " -> "
              << fixed(blank.m1, 15) << ", m2 " << fixed(m2, 12) << " -> "
              << fixed(blank.m2.re, 15) << "\n";
  }
  return blank;
}

std::vector<double> parse_alpha(const std::string& spec) {
  auto to_double = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || s.empty()) {
      throw UsageError("--alpha: cannot parse '" + s + "'");
    }
    return v;
  };
  auto in_range = [](double a) {
    if (!(a >= 0.0 && a <= 1.0)) {
      throw UsageError("--alpha: values must lie in [0, 1]");
    }
    return a;
  };

  const auto first = spec.find(':');
  if (first == std::string::npos) return {in_range(to_double(spec))};
  const auto second = spec.find(':', first + 1);
  if (second == std::string::npos) {
    throw UsageError("--alpha: expected <real> or <start:stop:step>");
  }
  const double start = to_double(spec.substr(0, first));
  const double stop = to_double(spec.substr(first + 1, second - first - 1));
  const double step = to_double(spec.substr(second + 1));
  if (!(step > 0.0)) throw UsageError("--alpha: step must be positive");
  if (!(start <= stop)) throw UsageError("--alpha: start must not exceed stop");
  in_range(start);
  in_range(stop);

  const auto count =
      static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
  std::vector<double> grid;
  grid.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    grid.push_back(std::min(stop, start + static_cast<double>(i) * step));
  }
  return grid;
}

qdel_input input_from_alpha(double alpha) {
  return qdel_input{alpha, {std::sqrt(std::max(0.0, 1.0 - alpha * alpha)), 0.0}};
}

// -- Subcommands -------------------------------------------------------------

int cmd_table(int which, const OutputOptions& o) {
  qdel_table_row rows[16];
  std::size_t count = 0;
  check(qdel_table(which, rows, std::size(rows), &count), "table");

  Table t(o.delimiter());
  t.row({"m1_sq", "m2_sq", "diff", "f_positive", "f_negative"});
  for (std::size_t i = 0; i < count; ++i) {
    const qdel_table_row& r = rows[i];
    const double neg = r.fidelity.degenerate ? r.fidelity.positive_branch
                                             : r.fidelity.negative_branch;
    t.row({fixed(r.m1_sq, 1), fixed(r.m2_sq, 1), fixed(r.diff, 1),
           fixed(r.fidelity.positive_branch, o.precision),
           fixed(neg, o.precision)});
  }
  write_output(o, t.str());
  return kExitOk;
}

int cmd_pb(double m1, double m2, const std::string& alpha_spec, double tol,
           const OutputOptions& o) {
  const qdel_blank blank = blank_from_cli(m1, m2, tol);
  const std::vector<double> alphas = parse_alpha(alpha_spec);

  Table t(o.delimiter());
  t.row({"alpha", "rho00", "rho01_re", "rho01_im", "rho11", "rho00_closed",
         "rho01_closed_re", "rho01_closed_im", "rho11_closed", "f2",
         "f2_closed", "deviation"});
  double f_min = std::numeric_limits<double>::infinity();
  double f_max = -f_min;
  double worst = 0.0;
  const int p = o.precision;
  for (double alpha : alphas) {
    const qdel_input input = input_from_alpha(alpha);

    qdel_object* rho = nullptr;
    check(qdel_pb_with_transformer_rho2(&input, &blank, &rho), "pb");
    qdel_complex sim[4];
    std::size_t n = 0;
    const qdel_status data_status = qdel_object_data(rho, sim, 4, &n);
    qdel_object_destroy(rho);
    check(data_status, "pb");

    qdel_complex closed[4];
    check(qdel_pb_with_transformer_rho2_closed_form(&input, &blank, closed),
          "pb");
    qdel_fidelity_report report;
    check(qdel_fidelity(QDEL_MACHINE_PB_WITH_TRANSFORMER, &blank, &input,
                        &report),
          "pb");
    double f_closed = 0.0;
    check(qdel_pb_with_transformer_f2_closed_form(&input, &blank, &f_closed),
          "pb");

    double dev = std::abs(report.fidelity - f_closed);
    for (int k = 0; k < 4; ++k) {
      dev = std::max(dev, std::hypot(sim[k].re - closed[k].re,
                                     sim[k].im - closed[k].im));
    }
    worst = std::max(worst, dev);
    f_min = std::min(f_min, report.fidelity);
    f_max = std::max(f_max, report.fidelity);

    t.row({fixed(alpha, std::max(p, 2)), fixed(sim[0].re, p),
           fixed(sim[1].re, p), fixed(sim[1].im, p), fixed(sim[3].re, p),
           fixed(closed[0].re, p), fixed(closed[1].re, p),
           fixed(closed[1].im, p), fixed(closed[3].re, p),
           fixed(report.fidelity, p), fixed(f_closed, p), sci(dev)});
  }
  t.comment("f2_min=" + fixed(f_min, p) + " f2_max=" + fixed(f_max, p) +
            " f2_spread=" + sci(f_max - f_min) +
            " max_deviation=" + sci(worst));
  write_output(o, t.str());
  return kExitOk;
}

int cmd_average(const std::string& machine_name, double m1, double m2,
                std::size_t samples, double tol, const OutputOptions& o) {
  qdel_machine machine;
  if (qdel_machine_parse(machine_name.c_str(), &machine) != QDEL_OK) {
    throw UsageError(std::string(qdel_last_error_message()) +
                     " (expected one-transformer, two-transformer, "
                     "pb-with-transformer or pb-alone)");
  }
  const qdel_blank blank = blank_from_cli(m1, m2, tol);
  double average = 0.0;
  const qdel_status s = qdel_average_fidelity(machine, &blank, samples, &average);
  if (s == QDEL_ERR_OUT_OF_SCOPE || s == QDEL_ERR_INVALID_ARGUMENT) {
    throw UsageError(qdel_last_error_message());
  }
  check(s, "average");

  Table t(o.delimiter());
  t.row({"machine", "m1", "m2", "samples", "average", "exact_reference"});
  const std::string reference =
      machine == QDEL_MACHINE_PB_ALONE ? fixed(5.0 / 6.0, o.precision) : "";
  t.row({machine_name, fixed(blank.m1, o.precision),
         fixed(blank.m2.re, o.precision), std::to_string(samples),
         fixed(average, o.precision), reference});
  write_output(o, t.str());
  return kExitOk;
}

int cmd_verify(const qdel_verify_options& options, const OutputOptions& o) {
  qdel_verify_report* report = nullptr;
  check(qdel_verify_run(&options, &report), "verify");

  Table t(o.delimiter());
  t.row({"check", "status", "deviation", "tolerance", "anchor"});
  const std::size_t n = qdel_verify_report_count(report);
  for (std::size_t i = 0; i < n; ++i) {
    qdel_verify_outcome outcome;
    if (qdel_verify_report_get(report, i, &outcome) != QDEL_OK) continue;
    t.row({outcome.check, outcome.passed ? "pass" : "fail",
           sci(outcome.deviation), sci(outcome.tolerance), outcome.anchor});
  }
  const bool ok = qdel_verify_report_all_passed(report) != 0;
  qdel_verify_report_destroy(report);
  write_output(o, t.str());
  return ok ? kExitOk : kExitVerifyFailed;
}

void add_output_options(CLI::App* cmd, OutputOptions& o) {
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"csv", "tsv"}))
      ->capture_default_str();
  cmd->add_option("--precision", o.precision, "Decimal places")
      ->check(CLI::Range(1, 15))
      ->capture_default_str();
  cmd->add_option("--output", o.output, "Output path, '-' for stdout")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Approximate quantum deletion machine simulator"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(qdel_version()));

  OutputOptions out;

  auto* table1 = app.add_subcommand("table1",
                                    "One-transformer limiting fidelity table");
  add_output_options(table1, out);
  auto* table2 = app.add_subcommand("table2",
                                    "Two-transformer limiting fidelity table");
  add_output_options(table2, out);

  double m1 = 0.0;
  double m2 = 0.0;
  std::string alpha = "0:1:0.1";
  double cli_tol = 1e-6;
  auto* pb = app.add_subcommand(
      "pb", "Deleter + transformer: simulated vs closed-form mode-2 state");
  pb->add_option("--m1", m1, "Blank amplitude m1")->required();
  pb->add_option("--m2", m2, "Blank amplitude m2 (real)")->required();
  pb->add_option("--alpha", alpha, "Input amplitude alpha or start:stop:step")
      ->capture_default_str();
  pb->add_option("--tol", cli_tol, "Tolerance on m1^2 + m2^2 = 1")
      ->capture_default_str();
  add_output_options(pb, out);

  std::string machine;
  std::size_t samples = 10001;
  auto* average =
      app.add_subcommand("average", "Average fidelity over input states");
  average->add_option("machine", machine,
                      "one-transformer | two-transformer | "
                      "pb-with-transformer | pb-alone")
      ->required();
  average->add_option("--m1", m1, "Blank amplitude m1")->required();
  average->add_option("--m2", m2, "Blank amplitude m2 (real)")->required();
  average->add_option("--samples", samples, "Quadrature points in alpha^2")
      ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()))
      ->capture_default_str();
  average->add_option("--tol", cli_tol, "Tolerance on m1^2 + m2^2 = 1")
      ->capture_default_str();
  add_output_options(average, out);

  qdel_verify_options vopt;
  qdel_verify_options_default(&vopt);
  auto* verify = app.add_subcommand("verify", "Run every verification check");
  verify->add_option("--tol", vopt.table_tolerance,
                     "Tolerance for printed table and headline values")
      ->capture_default_str();
  verify->add_option("--alg-tol", vopt.algebraic_tolerance,
                     "Tolerance for algebraic identities")
      ->capture_default_str();
  verify->add_option("--eig-tol", vopt.eigen_tolerance,
                     "Tolerance for eigenvalue checks")
      ->capture_default_str();
  verify->add_option("--perturb-transformer", vopt.transformer_perturbation,
                     "Fault injection: add this to T's (00,00) entry")
      ->group("Testing");
  add_output_options(verify, out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*table1) return cmd_table(1, out);
    if (*table2) return cmd_table(2, out);
    if (*pb) return cmd_pb(m1, m2, alpha, cli_tol, out);
    if (*average) return cmd_average(machine, m1, m2, samples, cli_tol, out);
    if (*verify) return cmd_verify(vopt, out);
  } catch (const UsageError& e) {
    std::cerr << "qdel: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "qdel: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
