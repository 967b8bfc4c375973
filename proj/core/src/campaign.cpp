#include "balpha/campaign.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "balpha/builders.hpp"
#include "balpha/eigen.hpp"
#include "balpha/errors.hpp"
#include "balpha/matrix.hpp"
#include "balpha/quotient.hpp"
#include "balpha/structure.hpp"
#include "balpha/theorems.hpp"
#include "balpha/threshold.hpp"

namespace balpha {

namespace {

class Sink {
 public:
  Sink(const CampaignOptions& opt, std::vector<TheoremVerdict>& out) : opt_(opt), out_(out) {}
  void add(TheoremVerdict v) {
    if (!opt_.skip.count(v.theorem)) out_.push_back(std::move(v));
  }
  template <typename Range>
  void add_all(Range&& vs) {
    for (auto& v : vs) add(std::move(v));
  }
  bool wants(const std::string& theorem) const { return !opt_.skip.count(theorem); }

 private:
  const CampaignOptions& opt_;
  std::vector<TheoremVerdict>& out_;
};

TheoremVerdict simple(std::string theorem, const Graph& g, std::optional<double> alpha, double gap,
                      Status status, std::string detail = {}) {
  TheoremVerdict v;
  v.theorem = std::move(theorem);
  v.graph = g.label();
  v.alpha = alpha;
  v.gap = gap;
  v.status = status;
  v.detail = std::move(detail);
  return v;
}

std::optional<ClosedFormFamily> closed_form_family(const FamilySpec& f) {
  switch (f.family) {
    case Family::complete:
      return f.n == 2 ? ClosedFormFamily::bipartite : ClosedFormFamily::complete;
    case Family::h_ln:
      return ClosedFormFamily::hln;
    case Family::path:
    case Family::star:
    case Family::complete_bipartite:
    case Family::pendant_attach:
      return ClosedFormFamily::bipartite;
    case Family::cycle:
      if (f.n % 2 == 0) return ClosedFormFamily::bipartite;
      return std::nullopt;
  }
  return std::nullopt;
}

void per_alpha(const GraphCase& c, double alpha, const CampaignOptions& opt, const StructureReport& rep,
               Sink& sink) {
  const Graph& g = c.graph;
  const Spectrum spec = sym_eig(b_alpha(g, alpha));

  for (BoundKind k : {BoundKind::independent_set, BoundKind::clique, BoundKind::false_twins,
                      BoundKind::true_twins, BoundKind::pendant}) {
    sink.add_all(multiplicity_bounds(g, alpha, k, spec));
  }

  if (rep.p > 0) {
    try {
      sink.add(exact_pendant_multiplicity(g, alpha));
    } catch (const HypothesisError& e) {
      sink.add(vacuous("pendant_multiplicity", g.label(), alpha, e.what()));
    }
    sink.add(reduction_spectrum_check(g, alpha));
  }

  Partition part;
  if (c.family && c.family->family == Family::h_ln) {
    part = hln_partition(c.family->n, c.family->ell);
  } else {
    part = equitable_refinement(g);
  }
  sink.add_all(misc_identities_check(g, alpha, part));

  const auto edges = g.edges();
  const std::size_t ne = std::min<std::size_t>(edges.size(), static_cast<std::size_t>(opt.max_edges));
  for (std::size_t i = 0; i < ne; ++i) sink.add_all(edge_delete_compare(g, edges[i], alpha));

  if (std::abs(alpha - 0.5) <= 1e-12) {
    bool done = false;
    for (int u = 0; u < g.order() && !done; ++u) {
      for (int v : g.neighbors(u)) {
        for (int w = 0; w < g.order() && !done; ++w) {
          if (w != u && !g.adjacent(u, w)) {
            sink.add(max_degree_rotation_check(g, u, v, w));
            done = true;
          }
        }
        if (done) break;
      }
    }
    if (!done) sink.add(vacuous("max_degree_rotation", g.label(), alpha, "no edge can be rotated"));
  } else {
    const auto triples = rotation_candidates(g, alpha);
    if (triples.empty()) sink.add(vacuous("edge_rotation", g.label(), alpha, "no qualifying triple"));
    const std::size_t nt = std::min<std::size_t>(triples.size(), static_cast<std::size_t>(opt.max_rotations));
    for (std::size_t i = 0; i < nt; ++i) {
      sink.add(edge_rotation_check(g, triples[i].u, triples[i].v, triples[i].w, alpha));
    }
  }

  if (c.family && c.family->family == Family::h_ln) {
    sink.add(hln_spectrum_check(c.family->n, c.family->ell, alpha));
  }
  if (c.family && c.family->family == Family::complete) {
    const double dist =
        multiset_distance(expand(complete_spectrum(c.family->n, alpha)), spec.eigenvalues);
    sink.add(simple("complete_spectrum", g, alpha, -dist,
                    dist <= kSpectrumTol ? Status::pass : Status::fail));
  }
}

void thresholds(const GraphCase& c, const CampaignOptions& opt, Sink& sink) {
  const Graph& g = c.graph;
  if (g.size() == 0) {
    sink.add(vacuous("beta0_range", g.label(), std::nullopt, "edgeless: beta0 = 1 by convention"));
    return;
  }
  const ThresholdReport r = threshold_report(g, opt.tol);
  const double b = r.beta0.value;
  const double a = r.alpha0.value;

  sink.add(simple("beta0_range", g, std::nullopt, b - 2.0 / 3.0,
                  b >= 2.0 / 3.0 - kSpectrumTol && b < 1.0 ? Status::pass : Status::fail));
  sink.add(simple("alpha0_range", g, std::nullopt, 0.5 - a,
                  a > 0.0 && a <= 0.5 + kSpectrumTol ? Status::pass : Status::fail));
  sink.add(simple("epsilon_bound", g, std::nullopt, r.epsilon - 1.0 / 6.0,
                  weak_greater(r.epsilon, 1.0 / 6.0, 1e-8)));

  // beta0 is a minimum over components, so on disconnected graphs the floor
  // only sees whether some edge-carrying component is bipartite.
  const bool bip = has_bipartite_edge_component(g);
  const bool at_floor = std::abs(b - 2.0 / 3.0) <= kSpectrumTol;
  const char* what = bipartition(g) ? "bipartite" : bip ? "bipartite component" : "not bipartite";
  sink.add(simple("bipartite_iff", g, std::nullopt, bip ? -std::abs(b - 2.0 / 3.0) : b - 2.0 / 3.0,
                  bip == at_floor ? Status::pass : Status::fail, what));

  if (sink.wants("psd_threshold")) {
    const double delta = 1e-3;
    const double inside = sym_eig(b_alpha(g, std::max(0.0, b - delta))).smallest();
    const double outside = sym_eig(b_alpha(g, std::min(1.0, b + delta))).smallest();
    const bool ok = inside >= -kSpectrumTol && outside < 0.0;
    sink.add(simple("psd_threshold", g, std::nullopt, std::min(inside + kSpectrumTol, -outside),
                    ok ? Status::pass : Status::fail));
  }

  if (!c.family) return;
  const auto fam = closed_form_family(*c.family);
  if (!fam) return;
  const ClosedForm cf = closed_forms(*fam, c.family->n, c.family->ell);
  auto compare = [&](const char* id, double closed, double computed) {
    const double err = std::abs(closed - computed);
    sink.add(simple(id, g, std::nullopt, -err, err <= kSpectrumTol ? Status::pass : Status::fail,
                    "closed form " + format_number(closed)));
  };
  compare("beta0_closed_form", cf.beta0, b);
  compare("alpha0_closed_form", cf.alpha0, a);
  compare("epsilon_closed_form", cf.epsilon, r.epsilon);
  if (*fam == ClosedFormFamily::hln && c.family->ell == 1) {
    const double d = hln1_consistency(c.family->n);
    sink.add(simple("hln1_consistency", g, std::nullopt, -std::abs(d),
                    std::abs(d) <= 1e-6 ? Status::pass : Status::fail,
                    "beta0 - alpha0 - epsilon from the printed formulas"));
  }
}

}  // namespace

std::vector<double> default_alphas() { return {0.0, 0.25, 0.45, 0.55, 2.0 / 3.0, 0.8, 1.0}; }

int CampaignResult::failures() const {
  return static_cast<int>(std::count_if(verdicts.begin(), verdicts.end(),
                                        [](const TheoremVerdict& v) { return v.failed(); }));
}

CampaignResult run_campaign(const std::vector<GraphCase>& cases, const CampaignOptions& options) {
  CampaignResult result;
  Sink sink(options, result.verdicts);
  for (const GraphCase& c : cases) {
    const Graph& g = c.graph;
    const StructureReport rep = classify_vertices(g);
    for (double alpha : options.alphas) per_alpha(c, alpha, options, rep, sink);

    const double ts[] = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    sink.add_all(convexity_concavity_check(g, 0.0, 1.0, ts));
    if (rep.p > 0) sink.add_all(nullity_decomposition(g));
    thresholds(c, options, sink);
    if (c.family && c.family->family == Family::complete) sink.add(nonmonotonicity_witness(c.family->n));
  }
  return result;
}

std::vector<GraphCase> random_cases(int n, double p, int trials, std::uint64_t seed) {
  std::mt19937_64 seeds(seed);
  std::vector<GraphCase> out;
  for (int i = 0; i < trials; ++i) {
    const std::uint64_t s = seeds();
    Graph g = erdos_renyi(n, p, s).relabeled("random(" + std::to_string(n) + "," + format_number(p) + "," +
                                             std::to_string(seed) + ")#" + std::to_string(i));
    out.push_back({std::move(g), std::nullopt});
  }
  return out;
}

}  // namespace balpha
