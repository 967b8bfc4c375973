#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "balpha/eigen.hpp"
#include "balpha/graph.hpp"
#include "balpha/structure.hpp"
#include "balpha/verdict.hpp"

namespace balpha {

// Tolerance for counting an eigenvalue's multiplicity.
inline constexpr double kMultiplicityTol = 1e-6;
// Weak inequalities between eigenvalues.
inline constexpr double kInequalityTol = 1e-9;
// Spectrum containment and multiset agreement.
inline constexpr double kSpectrumTol = 1e-7;

// Sorted-multiset distance: max |a_i - b_i| after sorting both, +inf when the
// sizes differ.
double multiset_distance(std::vector<double> a, std::vector<double> b);

// Predicted eigenvalues of twin-type vertex sets.
double independent_set_eigenvalue(int degree, double alpha);  // (1-a) d
double clique_eigenvalue(int degree, double alpha);           // d + 1 - a (d + 2)

enum class BoundKind { independent_set, clique, true_twins, false_twins, pendant };

// Lower bounds on eigenvalue multiplicities. independent_set / clique emit one
// verdict per false / true twin class (bound |S| - 1). true_twins /
// false_twins aggregate all classes of that kind sharing a predicted value
// (bound sum |S_i| - t). pendant emits m(1 - a) >= p - q when p >= 1.
std::vector<TheoremVerdict> multiplicity_bounds(const Graph& g, double alpha, BoundKind kind);
std::vector<TheoremVerdict> multiplicity_bounds(const Graph& g, double alpha, BoundKind kind,
                                                const Spectrum& spectrum);

// m_{B_a}(1 - a) = p - q + sum m_{N_i}(1 - a). Throws HypothesisError at
// a = 1/2 and StructureError when g has no pendant vertex.
TheoremVerdict exact_pendant_multiplicity(const Graph& g, double alpha);

// eig(reduced) together with (1 - a) repeated p - q times equals eig(B_a).
TheoremVerdict reduction_spectrum_check(const Graph& g, double alpha);

// eta(G), m_L(1) and m_Q(1) from the core components. StructureError when p = 0.
std::array<TheoremVerdict, 3> nullity_decomposition(const Graph& g);

// Characteristic polynomial of E(a) against the closed form at each sample x.
TheoremVerdict lemS_check(int s, double d, double alpha, std::span<const double> xs);
double lemS_closed_form(int s, double d, double alpha, double x);

// Item (i): lambda_j(G) >= lambda_j(G - e) for all j, when a <= 2/3.
// Item (ii): lambda_1(G) > lambda_1(G - e), when a > 1/2 and G is connected.
// Items outside their range come back VACUOUS.
std::array<TheoremVerdict, 2> edge_delete_compare(const Graph& g, Edge e, double alpha);

// Moves edge {u, v} to {u, w}. Throws HypothesisError at a = 1/2 and
// std::invalid_argument when {u, v} is not an edge or {u, w} is.
TheoremVerdict edge_rotation_check(const Graph& g, int u, int v, int w, double alpha);
// At a = 1/2, B = D/2, so lambda_1 follows the maximum degree.
TheoremVerdict max_degree_rotation_check(const Graph& g, int u, int v, int w);

struct RotationTriple {
  int u, v, w;
};
// Triples meeting the rotation hypotheses for the top eigenvector of B_a(g).
std::vector<RotationTriple> rotation_candidates(const Graph& g, double alpha);

// Midpoint-style convexity of lambda_1 and concavity of lambda_n along
// a = (1 - t) a1 + t a2.
std::array<TheoremVerdict, 2> convexity_concavity_check(const Graph& g, double alpha1, double alpha2,
                                                        std::span<const double> ts);

// Spectral radius, B_a versus A_a (as printed, with equal indices, and with the
// reversed index n + 1 - k), and quotient containment for an optional
// partition. The radius check is VACUOUS on disconnected graphs.
std::vector<TheoremVerdict> misc_identities_check(const Graph& g, double alpha,
                                                  const std::optional<Partition>& partition = std::nullopt);

// Closed-form B_a spectrum of h_ln(n, ell) as (value, multiplicity) pairs.
std::vector<EigenGroup> hln_spectrum(int n, int ell, double alpha);
std::vector<double> expand(const std::vector<EigenGroup>& groups);
TheoremVerdict hln_spectrum_check(int n, int ell, double alpha);

// B_a(K_n) spectrum: a(n - 1) once and n - a(n + 1) with multiplicity n - 1.
std::vector<EigenGroup> complete_spectrum(int n, double alpha);

// lambda_1 and lambda_n of B_a(K_n) sampled on a grid: both must change
// direction, showing the eigenvalues are not monotone in a.
TheoremVerdict nonmonotonicity_witness(int n, int samples = 101);

}  // namespace balpha
