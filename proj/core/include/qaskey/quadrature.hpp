#pragma once

#include <functional>
#include <span>
#include <vector>

#include "qaskey/multivar.hpp"

namespace qaskey {

inline constexpr long long default_node_budget = 10'000'000;

/// Tensor-product midpoint rule in angle coordinates over (0, pi)^dims,
/// with theta_i = (i + 1/2) pi / M per dimension.  The transformed integrand
/// extends to a smooth even periodic function, so the rule converges
/// spectrally.  Total node count M^dims is capped by node_budget.
struct quadrature_grid {
  int nodes_per_dim;
  int dims;
  long long node_budget = default_node_budget;

  quadrature_grid(int nodes_per_dim_, int dims_,
                  long long node_budget_ = default_node_budget);

  /// M^dims; throws budget_exceeded when over budget.
  long long total_nodes() const;
};

/// Fixed-shape binary-tree sum of v (split at the midpoint, recursively).
/// The reduction result is independent of how the leaves were produced, so
/// concurrent block evaluation reproduces the single-threaded sum bit for bit.
double pairwise_tree_sum(std::span<const double> v);

/// Block size of the deterministic summation: nodes are enumerated in
/// lexicographic order (theta_1 slowest), summed sequentially within fixed
/// blocks of this size, and the block sums are combined by pairwise_tree_sum.
inline constexpr long long quadrature_block_size = 4096;

/// Midpoint-rule tensor sum  sum_nodes f(theta) * (pi/M)^dims .
/// f must be pure; it is evaluated concurrently across blocks.
double integrate_theta(const std::function<double(std::span<const double>)>& f,
                       const quadrature_grid& grid);

/// All degree vectors of length s with total degree <= max_total, in
/// lexicographic order.
std::vector<multi_index> all_multi_indices(int s, int max_total);

/// Numerically computed Gram matrix of a family over all multi-indices up to
/// a total degree, with error metrics against the closed-form norms.
struct gram_report {
  family_spec family;
  int max_total_degree;
  quadrature_grid grid;
  std::vector<multi_index> indices;
  std::vector<double> entries;  // row-major K x K, symmetric by construction
  std::vector<double> closed_form_norms;
  std::vector<double> diag_rel_err;
  double diag_rel_err_max = 0.0;
  double offdiag_max = 0.0;  // max |G_nm| / sqrt(lambda_n lambda_m), n != m
  long long nodes_used = 0;
  double runtime_seconds = 0.0;

  double entry(int i, int j) const;
};

/// Recomputes diag_rel_err, diag_rel_err_max and offdiag_max from the current
/// entries and closed_form_norms (used after perturbing the norms in the
/// verifier's negative control).
void compute_report_metrics(gram_report& report);

/// Integrates every pair P_n P_m rho over (0, pi)^s (each pair computed once
/// and mirrored) and fills the error metrics.  Every weight sample must be
/// strictly positive; a non-positive or non-real sample aborts.
gram_report gram(const family_spec& spec, int max_total_degree,
                 const quadrature_grid& grid);

struct partial_integral_check {
  double quadrature;   // j-dimensional integral at the fixed remaining angle
  double closed_form;  // the telescoped product formula
};

/// Checks the single-step integral identity: integrating the first j
/// variables of P_n P_m rho against the closed form with Kronecker deltas,
/// finite q-products and the four coupling factors at theta_{j+1}.
/// theta_rest supplies the fixed angles theta_{j+1}..theta_s (only the first
/// enters).  Defined for the mv_askey_wilson kind, 1 <= j <= s-1.
partial_integral_check verify_partial_integral(
    const family_spec& spec, const multi_index& n, const multi_index& m, int j,
    std::span<const double> theta_rest, const quadrature_grid& grid);

}  // namespace qaskey
