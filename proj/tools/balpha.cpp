// balpha: command-line front end for the B_alpha library.
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "balpha/builders.hpp"
#include "balpha/campaign.hpp"
#include "balpha/eigen.hpp"
#include "balpha/errors.hpp"
#include "balpha/generators.hpp"
#include "balpha/matrix.hpp"
#include "balpha/structure.hpp"
#include "balpha/sweep.hpp"
#include "balpha/theorems.hpp"
#include "balpha/threshold.hpp"

namespace {

using namespace balpha;

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Source {
  std::string file;
  std::string family;
  int n = 0;
  int ell = 0;
  int s = 0;
  int a = 0;
  int b = 0;
  std::vector<int> sizes;
};

void add_source(CLI::App* cmd, Source& src) {
  cmd->add_option("--graph,--file", src.file, "edge-list file");
  cmd->add_option("--family", src.family,
                  "complete|path|cycle|star|complete_bipartite|h_ln|pendant_attach");
  cmd->add_option("--n", src.n, "order parameter");
  cmd->add_option("--ell", src.ell, "h_ln cross edges");
  cmd->add_option("--s", src.s, "star leaves");
  cmd->add_option("--a", src.a, "first part of K_{a,b}");
  cmd->add_option("--b", src.b, "second part of K_{a,b}");
  cmd->add_option("--sizes", src.sizes, "pendant_attach star sizes along a path")->delimiter(',');
}

GraphCase load(const Source& src) {
  if (!src.file.empty() && !src.family.empty()) throw Usage("give either --graph or --family, not both");
  if (!src.file.empty()) {
    if (!std::ifstream(src.file)) throw Usage("cannot open " + src.file);
    return {read_edge_list_file(src.file), std::nullopt};
  }
  if (src.family.empty()) throw Usage("a graph source is required (--graph FILE or --family NAME)");
  const auto fam = family_from_name(src.family);
  if (!fam) throw Usage("unknown family '" + src.family + "'");
  FamilySpec spec;
  spec.family = *fam;
  spec.n = src.n;
  spec.ell = src.ell;
  spec.s = src.s;
  spec.a = src.a;
  spec.b = src.b;
  spec.star_sizes = src.sizes;
  try {
    return {generate(spec), spec};
  } catch (const std::invalid_argument& e) {
    throw Usage(e.what());
  }
}

void check_alpha(double a) {
  if (!std::isfinite(a)) throw Usage("alpha must be finite");
  if (out_of_unit_range(a)) std::cerr << "warning: alpha " << format_number(a) << " is outside [0, 1]\n";
}

int cmd_spectrum(const Source& src, const std::vector<double>& alphas, bool grouped, bool dump_matrix) {
  const GraphCase c = load(src);
  for (double a : alphas) {
    check_alpha(a);
    const SymmetricMatrix m = b_alpha(c.graph, a);
    if (dump_matrix) dump(std::cout, m);
    const Spectrum s = sym_eig(m);
    if (grouped) {
      for (const auto& g : s.groups)
        std::cout << format_number(a) << '\t' << format_number(g.value) << '\t' << g.multiplicity << '\n';
    } else {
      std::cout << format_number(a);
      for (double x : s.eigenvalues) std::cout << '\t' << format_number(x);
      std::cout << '\n';
    }
  }
  return 0;
}

int cmd_sweep(const Source& src, double from, double to, int steps, const std::string& out,
              const std::string& svg) {
  const GraphCase c = load(src);
  SweepTable t;
  try {
    t = run_sweep(c.graph, from, to, steps);
  } catch (const std::invalid_argument& e) {
    throw Usage(e.what());
  }
  if (out.empty() || out == "-") {
    write_csv(std::cout, t);
  } else {
    std::ofstream f(out);
    if (!f) throw Usage("cannot write " + out);
    write_csv(f, t);
  }
  if (!svg.empty()) {
    std::ofstream f(svg);
    if (!f) throw Usage("cannot write " + svg);
    write_svg(f, t);
  }
  return 0;
}

int cmd_threshold(const Source& src, const std::string& which, double tol) {
  const GraphCase c = load(src);
  if (!(tol > 0.0)) throw Usage("--tol must be positive");
  if (which == "beta0" || which == "alpha0") {
    const Bisection b = which == "beta0" ? beta0(c.graph, tol) : alpha0(c.graph, tol);
    if (b.method == Method::definitional) std::cerr << "note: edgeless graph, value is by convention\n";
    std::cout << format_number(b.value) << '\n';
    return 0;
  }
  const ThresholdReport r = threshold_report(c.graph, tol);
  std::cout << threshold_csv_header() << '\n' << threshold_csv_row(r) << '\n';
  return 0;
}

int cmd_hln(int n, int ell, const std::vector<double>& alphas) {
  try {
    for (double a : alphas) {
      check_alpha(a);
      for (const auto& g : hln_spectrum(n, ell, a))
        std::cout << format_number(a) << '\t' << format_number(g.value) << '\t' << g.multiplicity << '\n';
    }
    const ClosedForm cf = closed_forms(ClosedFormFamily::hln, n, ell);
    std::cout << "beta0\t" << format_number(cf.beta0) << '\n';
    std::cout << "alpha0\t" << format_number(cf.alpha0) << '\n';
    std::cout << "epsilon\t" << format_number(cf.epsilon) << '\n';
  } catch (const std::invalid_argument& e) {
    throw Usage(e.what());
  }
  return 0;
}

int cmd_multiplicity(const Source& src, double alpha, std::optional<double> value, double tol) {
  const GraphCase c = load(src);
  check_alpha(alpha);
  if (!(tol > 0.0)) throw Usage("--tol must be positive");
  const double v = value.value_or(1.0 - alpha);
  const Spectrum s = sym_eig(b_alpha(c.graph, alpha));
  std::cout << "m(" << format_number(v) << ")\t" << multiplicity_of(s, v, tol) << '\n';

  std::vector<TheoremVerdict> vs;
  for (BoundKind k : {BoundKind::independent_set, BoundKind::clique, BoundKind::false_twins,
                      BoundKind::true_twins, BoundKind::pendant}) {
    for (auto& x : multiplicity_bounds(c.graph, alpha, k, s)) vs.push_back(std::move(x));
  }
  if (classify_vertices(c.graph).p > 0) {
    try {
      vs.push_back(exact_pendant_multiplicity(c.graph, alpha));
    } catch (const HypothesisError& e) {
      vs.push_back(vacuous("pendant_multiplicity", c.graph.label(), alpha, e.what()));
    }
  }
  int failures = 0;
  for (const auto& x : vs) {
    std::cout << format_report_line(x) << '\n';
    failures += x.failed();
  }
  return failures ? 1 : 0;
}

int cmd_verify(const Source& src, bool random, double p, int trials, std::uint64_t seed,
               const std::vector<double>& alphas, const std::vector<std::string>& skip, double tol) {
  std::vector<GraphCase> cases;
  if (random) {
    if (!src.file.empty() || !src.family.empty()) throw Usage("--random excludes --graph and --family");
    if (src.n < 1) throw Usage("--random needs --n >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw Usage("--p must lie in [0, 1]");
    if (trials < 1) throw Usage("--trials must be >= 1");
    cases = random_cases(src.n, p, trials, seed);
  } else {
    cases.push_back(load(src));
  }
  CampaignOptions opt;
  if (!alphas.empty()) opt.alphas = alphas;
  for (double a : opt.alphas) check_alpha(a);
  opt.skip.insert(skip.begin(), skip.end());
  opt.tol = tol;
  const CampaignResult r = run_campaign(cases, opt);
  for (const auto& v : r.verdicts) std::cout << format_report_line(v) << '\n';
  std::cerr << r.verdicts.size() << " verdicts, " << r.failures() << " failed\n";
  return r.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"B_alpha spectra, multiplicities and positive-semidefiniteness thresholds"};
  app.require_subcommand(1);

  Source src;
  std::vector<double> alphas;
  double from = 0.0, to = 1.0, tol = 1e-10, mult_tol = 1e-6, alpha = 0.5, p = 0.5;
  int steps = 101, trials = 10;
  std::uint64_t seed = 1;
  std::string out, svg;
  std::optional<double> value;
  bool grouped = false, dump_matrix = false, random = false;
  std::vector<std::string> skip;

  auto* spectrum = app.add_subcommand("spectrum", "sorted B_alpha eigenvalues");
  add_source(spectrum, src);
  spectrum->add_option("--alpha", alphas, "alpha values")->delimiter(',')->required();
  spectrum->add_flag("--grouped", grouped, "print (value, multiplicity) groups");
  spectrum->add_flag("--dump", dump_matrix, "print the matrix before its spectrum");

  auto* sweep = app.add_subcommand("sweep", "eigenvalue curves over an alpha grid");
  add_source(sweep, src);
  sweep->add_option("--from", from, "first alpha")->capture_default_str();
  sweep->add_option("--to", to, "last alpha")->capture_default_str();
  sweep->add_option("--steps", steps, "grid points")->capture_default_str();
  sweep->add_option("--out", out, "CSV output (default stdout)");
  sweep->add_option("--svg", svg, "SVG chart output");

  std::vector<CLI::App*> threshold_cmds;
  for (const char* name : {"beta0", "alpha0", "epsilon"}) {
    auto* cmd = app.add_subcommand(name, std::string(name) + " by bisection");
    add_source(cmd, src);
    cmd->add_option("--tol", tol, "bracket width")->capture_default_str();
    threshold_cmds.push_back(cmd);
  }

  auto* hln = app.add_subcommand("hln", "closed-form spectrum and thresholds of h_ln(n, ell)");
  hln->add_option("--n", src.n, "clique order")->required();
  hln->add_option("--ell", src.ell, "cross edges")->required();
  hln->add_option("--alpha", alphas, "alpha values")->delimiter(',');

  auto* mult = app.add_subcommand("multiplicity", "eigenvalue multiplicity and its predicted bounds");
  add_source(mult, src);
  mult->add_option("--alpha", alpha, "alpha")->capture_default_str();
  mult->add_option("--value", value, "eigenvalue to count (default 1 - alpha)");
  mult->add_option("--tol", mult_tol, "counting tolerance")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run every applicable theorem check");
  add_source(verify, src);
  verify->add_flag("--random", random, "G(n, p) graphs instead of one source");
  verify->add_option("--p", p, "edge probability")->capture_default_str();
  verify->add_option("--trials", trials, "number of random graphs")->capture_default_str();
  verify->add_option("--seed", seed, "random seed")->capture_default_str();
  verify->add_option("--alpha", alphas, "alpha values (default corpus grid)")->delimiter(',');
  verify->add_option("--skip", skip, "theorem ids to leave out")->delimiter(',');
  verify->add_option("--tol", tol, "threshold bracket width")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (spectrum->parsed()) return cmd_spectrum(src, alphas, grouped, dump_matrix);
    if (sweep->parsed()) return cmd_sweep(src, from, to, steps, out, svg);
    for (auto* cmd : threshold_cmds)
      if (cmd->parsed()) return cmd_threshold(src, cmd->get_name(), tol);
    if (hln->parsed()) return cmd_hln(src.n, src.ell, alphas.empty() ? std::vector<double>{0.5} : alphas);
    if (mult->parsed()) return cmd_multiplicity(src, alpha, value, mult_tol);
    if (verify->parsed()) return cmd_verify(src, random, p, trials, seed, alphas, skip, tol);
  } catch (const Usage& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
