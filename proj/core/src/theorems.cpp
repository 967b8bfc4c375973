#include "balpha/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "balpha/builders.hpp"
#include "balpha/errors.hpp"
#include "balpha/pendant_reduction.hpp"
#include "balpha/quotient.hpp"

namespace balpha {

namespace {

bool near_half(double alpha) { return std::abs(alpha - 0.5) <= 1e-12; }

std::string members(const std::vector<int>& vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(vs[i]);
  }
  return out + "}";
}

TheoremVerdict make(std::string theorem, const Graph& g, std::optional<double> alpha) {
  TheoremVerdict v;
  v.theorem = std::move(theorem);
  v.graph = g.label();
  v.alpha = alpha;
  return v;
}

TheoremVerdict bound_verdict(std::string theorem, const Graph& g, double alpha, double value,
                             int bound, const Spectrum& spec, std::string detail) {
  TheoremVerdict v = make(std::move(theorem), g, alpha);
  const int observed = multiplicity_of(spec, value, kMultiplicityTol);
  v.predicted = {value, static_cast<double>(bound)};
  v.observed = {static_cast<double>(observed)};
  v.gap = observed - bound;
  v.tolerance = kMultiplicityTol;
  v.status = observed >= bound ? Status::pass : Status::fail;
  v.detail = std::move(detail);
  return v;
}

// Twin classes of one kind, aggregated by predicted eigenvalue.
std::vector<TheoremVerdict> aggregated_bounds(const Graph& g, double alpha, TwinKind kind,
                                              const Spectrum& spec) {
  struct Family {
    double value;
    int bound;
    std::string detail;
  };
  std::vector<Family> families;
  for (const auto& cls : twin_partition(g, kind)) {
    const int d = g.degree(cls.front());
    const double value = kind == TwinKind::false_twins ? independent_set_eigenvalue(d, alpha)
                                                       : clique_eigenvalue(d, alpha);
    auto it = std::find_if(families.begin(), families.end(),
                           [&](const Family& f) { return std::abs(f.value - value) <= 1e-12; });
    if (it == families.end()) {
      families.push_back({value, 0, {}});
      it = families.end() - 1;
    }
    it->bound += static_cast<int>(cls.size()) - 1;
    it->detail += members(cls);
  }
  std::vector<TheoremVerdict> out;
  const char* id = kind == TwinKind::false_twins ? "false_twin_families" : "true_twin_families";
  for (auto& f : families) out.push_back(bound_verdict(id, g, alpha, f.value, f.bound, spec, f.detail));
  return out;
}

int count_at(const SymmetricMatrix& m, double value) {
  if (m.order() == 0) return 0;
  return multiplicity_of(sym_eig(m), value, kMultiplicityTol);
}

}  // namespace

double multiset_distance(std::vector<double> a, std::vector<double> b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

double independent_set_eigenvalue(int degree, double alpha) { return (1.0 - alpha) * degree; }
double clique_eigenvalue(int degree, double alpha) { return degree + 1 - alpha * (degree + 2); }

std::vector<TheoremVerdict> multiplicity_bounds(const Graph& g, double alpha, BoundKind kind) {
  return multiplicity_bounds(g, alpha, kind, sym_eig(b_alpha(g, alpha)));
}

std::vector<TheoremVerdict> multiplicity_bounds(const Graph& g, double alpha, BoundKind kind,
                                                const Spectrum& spec) {
  std::vector<TheoremVerdict> out;
  switch (kind) {
    case BoundKind::independent_set:
      for (const auto& cls : twin_partition(g, TwinKind::false_twins)) {
        const int d = g.degree(cls.front());
        out.push_back(bound_verdict("indep_set_bound", g, alpha, independent_set_eigenvalue(d, alpha),
                                    static_cast<int>(cls.size()) - 1, spec, members(cls)));
      }
      break;
    case BoundKind::clique:
      for (const auto& cls : twin_partition(g, TwinKind::true_twins)) {
        const int d = g.degree(cls.front());
        out.push_back(bound_verdict("clique_bound", g, alpha, clique_eigenvalue(d, alpha),
                                    static_cast<int>(cls.size()) - 1, spec, members(cls)));
      }
      break;
    case BoundKind::false_twins:
      return aggregated_bounds(g, alpha, TwinKind::false_twins, spec);
    case BoundKind::true_twins:
      return aggregated_bounds(g, alpha, TwinKind::true_twins, spec);
    case BoundKind::pendant: {
      const StructureReport rep = classify_vertices(g);
      if (rep.p > 0) {
        out.push_back(bound_verdict("pendant_bound", g, alpha, 1.0 - alpha, rep.p - rep.q, spec,
                                    "p=" + std::to_string(rep.p) + " q=" + std::to_string(rep.q)));
      }
      break;
    }
  }
  return out;
}

TheoremVerdict exact_pendant_multiplicity(const Graph& g, double alpha) {
  if (std::abs(alpha - 0.5) <= 1e-9) throw HypothesisError("pendant multiplicity excludes alpha = 1/2");
  const PendantReduction red = pendant_reduction(g, alpha);
  const double value = 1.0 - alpha;
  int predicted = red.p - red.q;
  for (const auto& ni : red.n_components) predicted += count_at(ni, value);
  const int observed = multiplicity_of(sym_eig(b_alpha(g, alpha)), value, kMultiplicityTol);

  TheoremVerdict v = make("pendant_multiplicity", g, alpha);
  v.predicted = {static_cast<double>(predicted)};
  v.observed = {static_cast<double>(observed)};
  v.gap = -std::abs(observed - predicted);
  v.tolerance = kMultiplicityTol;
  v.status = observed == predicted ? Status::pass : Status::fail;
  v.detail = std::string(red.kind == ReductionCase::quasi_only ? "quasi_only" : "general") +
             " p=" + std::to_string(red.p) + " q=" + std::to_string(red.q) +
             " t=" + std::to_string(red.n_components.size());
  return v;
}

TheoremVerdict reduction_spectrum_check(const Graph& g, double alpha) {
  const PendantReduction red = pendant_reduction(g, alpha);
  std::vector<double> rebuilt = sym_eig(red.reduced).eigenvalues;
  rebuilt.insert(rebuilt.end(), static_cast<std::size_t>(red.p - red.q), 1.0 - alpha);
  const std::vector<double> full = sym_eig(b_alpha(g, alpha)).eigenvalues;

  TheoremVerdict v = make("reduction_spectrum", g, alpha);
  const double dist = multiset_distance(rebuilt, full);
  v.predicted = rebuilt;
  v.observed = full;
  v.gap = -dist;
  v.tolerance = kSpectrumTol;
  v.status = dist <= kSpectrumTol ? Status::pass : Status::fail;
  v.detail = "order " + std::to_string(red.reduced.order());
  return v;
}

std::array<TheoremVerdict, 3> nullity_decomposition(const Graph& g) {
  const StructureReport rep = classify_vertices(g);
  if (rep.p == 0) throw StructureError("no pendant vertices");
  const auto comps = core_components(g, rep);

  // Item, value, diagonal weight on D_i, off-diagonal weight on A(G_i), full matrix.
  struct Item {
    const char* id;
    double value;
    double diag;
    double off;
    SymmetricMatrix full;
  };
  std::array<Item, 3> items{{
      {"nullity", 0.0, 0.0, 1.0, build_base(g, BaseMatrix::adjacency)},
      {"laplacian_one", 1.0, 1.0, -1.0, build_base(g, BaseMatrix::laplacian)},
      {"signless_one", 1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0, build_base(g, BaseMatrix::signless_laplacian)},
  }};

  std::array<TheoremVerdict, 3> out;
  for (std::size_t k = 0; k < items.size(); ++k) {
    const Item& it = items[k];
    int predicted = rep.p - rep.q;
    for (const auto& c : comps) {
      SymmetricMatrix ni(static_cast<int>(c.vertices.size()));
      for (int i = 0; i < ni.order(); ++i) ni.set(i, i, it.diag * c.degrees[i]);
      for (auto [a, b] : c.subgraph.edges()) ni.set(a, b, it.off);
      predicted += count_at(ni, it.value);
    }
    // m_Q(1) is read off Q directly; the components are compared at 1/3.
    const double full_value = k == 2 ? 1.0 : it.value;
    const int observed = count_at(it.full, full_value);
    TheoremVerdict v = make(it.id, g, std::nullopt);
    v.predicted = {static_cast<double>(predicted)};
    v.observed = {static_cast<double>(observed)};
    v.gap = -std::abs(observed - predicted);
    v.tolerance = kMultiplicityTol;
    v.status = observed == predicted ? Status::pass : Status::fail;
    v.detail = "t=" + std::to_string(comps.size());
    out[k] = std::move(v);
  }
  return out;
}

double lemS_closed_form(int s, double d, double alpha, double x) {
  const double a = 1.0 - alpha;
  const double gamma = 2.0 * alpha - 1.0;
  return std::pow(x - a, s - 1) * ((x - a * d) * (x - a) - s * gamma * gamma);
}

TheoremVerdict lemS_check(int s, double d, double alpha, std::span<const double> xs) {
  if (s < 1) throw std::invalid_argument("lemS_check: s >= 1");
  const SymmetricMatrix e = e_block(s, d, alpha);
  TheoremVerdict v;
  v.theorem = "lemS";
  v.graph = "E(s=" + std::to_string(s) + ",d=" + format_number(d) + ")";
  v.alpha = alpha;
  v.tolerance = 1e-8;
  double worst = 0.0;
  bool ok = true;
  for (double x : xs) {
    const double lhs = char_poly_eval(e, x);
    const double rhs = lemS_closed_form(s, d, alpha, x);
    const double err = std::abs(lhs - rhs);
    v.observed.push_back(lhs);
    v.predicted.push_back(rhs);
    worst = std::max(worst, err / (1.0 + std::abs(rhs)));
    if (err > 1e-8 * (1.0 + std::abs(rhs))) ok = false;
  }
  v.gap = -worst;
  v.status = ok ? Status::pass : Status::fail;
  return v;
}

std::array<TheoremVerdict, 2> edge_delete_compare(const Graph& g, Edge e, double alpha) {
  auto [u, w] = e;
  if (!g.adjacent(u, w)) throw std::invalid_argument("edge_delete_compare: not an edge");
  const Graph h = g.without_edge(u, w);
  const std::vector<double> lg = eigenvalues(b_alpha(g, alpha));
  const std::vector<double> lh = eigenvalues(b_alpha(h, alpha));
  const std::string edge = "edge " + std::to_string(u) + "-" + std::to_string(w);

  std::array<TheoremVerdict, 2> out;
  if (alpha <= 2.0 / 3.0 + 1e-12) {
    TheoremVerdict v = make("edge_delete_dominance", g, alpha);
    double gap = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < lg.size(); ++j) gap = std::min(gap, lg[j] - lh[j]);
    v.predicted = lh;
    v.observed = lg;
    v.gap = gap;
    v.tolerance = kInequalityTol;
    v.status = weak_greater(gap, 0.0, kInequalityTol);
    v.detail = edge;
    out[0] = std::move(v);
  } else {
    out[0] = vacuous("edge_delete_dominance", g.label(), alpha, edge + ", alpha > 2/3");
  }

  if (alpha > 0.5 + 1e-12 && g.connected()) {
    TheoremVerdict v = make("edge_delete_strict", g, alpha);
    v.predicted = {lh.front()};
    v.observed = {lg.front()};
    v.gap = lg.front() - lh.front();
    v.tolerance = kStrictGap;
    v.status = strict_greater(lg.front(), lh.front());
    v.detail = edge;
    out[1] = std::move(v);
  } else {
    out[1] = vacuous("edge_delete_strict", g.label(), alpha,
                     edge + (g.connected() ? ", alpha <= 1/2" : ", disconnected"));
  }
  return out;
}

namespace {

// Entries this close to zero are not trusted for the sign hypotheses.
constexpr double kSignMargin = 1e-9;

void check_rotation_args(const Graph& g, int u, int v, int w) {
  const int n = g.order();
  if (u < 0 || v < 0 || w < 0 || u >= n || v >= n || w >= n) {
    throw std::invalid_argument("edge rotation: vertex out of range");
  }
  if (u == w) throw std::invalid_argument("edge rotation: u == w");
  if (!g.adjacent(u, v)) throw std::invalid_argument("edge rotation: {u,v} is not an edge");
  if (g.adjacent(u, w)) throw std::invalid_argument("edge rotation: {u,w} is already an edge");
}

bool rotation_hypothesis(double alpha, double xu, double xv, double xw) {
  if (xu <= kSignMargin) return false;
  if (alpha < 0.5) return xw <= xv && xv < -kSignMargin;
  return kSignMargin < xv && xv <= xw;
}

}  // namespace

TheoremVerdict edge_rotation_check(const Graph& g, int u, int v, int w, double alpha) {
  check_rotation_args(g, u, v, w);
  if (near_half(alpha)) throw HypothesisError("edge rotation excludes alpha = 1/2; use the max-degree check");
  EigenOptions opt;
  opt.vectors = true;
  const Spectrum s = sym_eig(b_alpha(g, alpha), opt);
  const double xu = s.eigenvectors(u, 0);
  const double xv = s.eigenvectors(v, 0);
  const double xw = s.eigenvectors(w, 0);
  const std::string triple = "u=" + std::to_string(u) + " v=" + std::to_string(v) + " w=" + std::to_string(w);
  if (!rotation_hypothesis(alpha, xu, xv, xw)) {
    return vacuous("edge_rotation", g.label(), alpha, triple + ", eigenvector signs do not qualify");
  }
  const Graph h = g.without_edge(u, v).with_edge(u, w);
  const double lh = sym_eig(b_alpha(h, alpha)).largest();
  TheoremVerdict out = make("edge_rotation", g, alpha);
  out.predicted = {s.largest()};
  out.observed = {lh};
  out.gap = lh - s.largest();
  out.tolerance = kStrictGap;
  out.status = strict_greater(lh, s.largest());
  out.detail = triple;
  return out;
}

TheoremVerdict max_degree_rotation_check(const Graph& g, int u, int v, int w) {
  check_rotation_args(g, u, v, w);
  const Graph h = g.without_edge(u, v).with_edge(u, w);
  const double lg = sym_eig(b_alpha(g, 0.5)).largest();
  const double lh = sym_eig(b_alpha(h, 0.5)).largest();
  const int dg = g.max_degree();
  const int dh = h.max_degree();

  TheoremVerdict out = make("max_degree_rotation", g, 0.5);
  out.predicted = {dg / 2.0, dh / 2.0};
  out.observed = {lg, lh};
  out.tolerance = kInequalityTol;
  const double err = std::max(std::abs(lg - dg / 2.0), std::abs(lh - dh / 2.0));
  const int want = (dh > dg) - (dh < dg);
  const double diff = lh - lg;
  const int got = diff > kInequalityTol ? 1 : (diff < -kInequalityTol ? -1 : 0);
  out.gap = -err;
  out.status = err <= kInequalityTol && want == got ? Status::pass : Status::fail;
  out.detail = "u=" + std::to_string(u) + " v=" + std::to_string(v) + " w=" + std::to_string(w);
  return out;
}

std::vector<RotationTriple> rotation_candidates(const Graph& g, double alpha) {
  std::vector<RotationTriple> out;
  if (near_half(alpha)) return out;
  EigenOptions opt;
  opt.vectors = true;
  const Spectrum s = sym_eig(b_alpha(g, alpha), opt);
  const int n = g.order();
  for (int u = 0; u < n; ++u) {
    for (int v : g.neighbors(u)) {
      for (int w = 0; w < n; ++w) {
        if (w == u || g.adjacent(u, w)) continue;
        if (rotation_hypothesis(alpha, s.eigenvectors(u, 0), s.eigenvectors(v, 0), s.eigenvectors(w, 0))) {
          out.push_back({u, v, w});
        }
      }
    }
  }
  return out;
}

std::array<TheoremVerdict, 2> convexity_concavity_check(const Graph& g, double alpha1, double alpha2,
                                                        std::span<const double> ts) {
  if (!(0.0 <= alpha1 && alpha1 < alpha2 && alpha2 <= 1.0)) {
    throw std::invalid_argument("convexity check needs 0 <= alpha1 < alpha2 <= 1");
  }
  const Spectrum s1 = sym_eig(b_alpha(g, alpha1));
  const Spectrum s2 = sym_eig(b_alpha(g, alpha2));
  double gap_top = std::numeric_limits<double>::infinity();
  double gap_bottom = std::numeric_limits<double>::infinity();
  for (double t : ts) {
    const Spectrum s = sym_eig(b_alpha(g, (1.0 - t) * alpha1 + t * alpha2));
    gap_top = std::min(gap_top, (1.0 - t) * s1.largest() + t * s2.largest() - s.largest());
    gap_bottom = std::min(gap_bottom, s.smallest() - ((1.0 - t) * s1.smallest() + t * s2.smallest()));
  }
  const std::string detail = "alpha1=" + format_number(alpha1) + " alpha2=" + format_number(alpha2);
  std::array<TheoremVerdict, 2> out;
  out[0] = make("convexity_lambda1", g, std::nullopt);
  out[1] = make("concavity_lambdan", g, std::nullopt);
  out[0].gap = gap_top;
  out[1].gap = gap_bottom;
  for (auto& v : out) {
    v.tolerance = kInequalityTol;
    v.status = weak_greater(v.gap, 0.0, kInequalityTol);
    v.detail = detail;
  }
  return out;
}

std::vector<TheoremVerdict> misc_identities_check(const Graph& g, double alpha,
                                                  const std::optional<Partition>& partition) {
  std::vector<TheoremVerdict> out;
  const SymmetricMatrix b = b_alpha(g, alpha);
  const Spectrum sb = sym_eig(b);
  const std::vector<double> la = eigenvalues(a_alpha(g, alpha));
  const int n = g.order();

  if (g.connected()) {
    TheoremVerdict v = make("spectral_radius", g, alpha);
    const double rho = std::max(std::abs(sb.largest()), std::abs(sb.smallest()));
    v.predicted = {rho};
    v.observed = {sb.largest()};
    v.gap = sb.largest() - rho;
    v.tolerance = kInequalityTol;
    v.status = weak_greater(sb.largest(), rho, kInequalityTol);
    out.push_back(std::move(v));
  } else {
    out.push_back(vacuous("spectral_radius", g.label(), alpha, "disconnected"));
  }

  for (int reversed = 0; reversed < 2; ++reversed) {
    TheoremVerdict v = make(reversed ? "b_vs_a_alpha_reversed" : "b_vs_a_alpha", g, alpha);
    double gap = std::numeric_limits<double>::infinity();
    int worst = 0;
    for (int k = 0; k < n; ++k) {
      const double rhs = -la[reversed ? n - 1 - k : k];
      if (sb.eigenvalues[k] - rhs < gap) {
        gap = sb.eigenvalues[k] - rhs;
        worst = k + 1;
      }
    }
    v.gap = gap;
    v.tolerance = kInequalityTol;
    v.status = weak_greater(gap, 0.0, kInequalityTol);
    v.detail = "worst k=" + std::to_string(worst);
    out.push_back(std::move(v));
  }

  if (partition) {
    const QuotientResult qr = quotient_matrix(b, g, *partition);
    if (!qr.equitable) {
      out.push_back(vacuous("quotient_containment", g.label(), alpha, "partition not equitable"));
    } else {
      const std::vector<double> lq = eigenvalues(qr.symmetrized());
      TheoremVerdict v = make("quotient_containment", g, alpha);
      double worst = 0.0;
      for (double theta : lq) {
        double best = std::numeric_limits<double>::infinity();
        for (double l : sb.eigenvalues) best = std::min(best, std::abs(theta - l));
        worst = std::max(worst, best);
      }
      v.predicted = lq;
      v.observed = sb.eigenvalues;
      v.gap = -worst;
      v.tolerance = kSpectrumTol;
      v.status = worst <= kSpectrumTol ? Status::pass : Status::fail;
      v.detail = std::to_string(lq.size()) + " blocks";
      out.push_back(std::move(v));

      if (alpha >= 0.5) {
        TheoremVerdict r = make("quotient_radius", g, alpha);
        double rho_q = 0.0;
        for (double theta : lq) rho_q = std::max(rho_q, std::abs(theta));
        const double rho = std::max(std::abs(sb.largest()), std::abs(sb.smallest()));
        r.predicted = {rho_q};
        r.observed = {rho};
        r.gap = -std::abs(rho - rho_q);
        r.tolerance = kSpectrumTol;
        r.status = approx_equal(rho, rho_q, kSpectrumTol);
        out.push_back(std::move(r));
      }
    }
  }
  return out;
}

}  // namespace balpha
