#include "qaskey/quadrature.hpp"

#include <chrono>
#include <cmath>
#include <mutex>
#include <numbers>
#include <thread>

namespace qaskey {

namespace {

constexpr double pi = std::numbers::pi;

// theta of node index i along one dimension
double node_theta(long long i, int m) {
  return (static_cast<double>(i) + 0.5) * pi / static_cast<double>(m);
}

void decode_node(long long flat, int m, std::span<double> thetas) {
  for (int d = static_cast<int>(thetas.size()) - 1; d >= 0; --d) {
    thetas[d] = node_theta(flat % m, m);
    flat /= m;
  }
}

// Runs fn(block_index) over [0, n_blocks) on up to `threads` workers, each
// taking a contiguous chunk.  Output written per block, so any schedule
// yields identical results.
void for_each_block(long long n_blocks, const std::function<void(long long)>& fn) {
  unsigned hw = std::thread::hardware_concurrency();
  long long threads = std::min<long long>(hw == 0 ? 1 : hw, n_blocks);
  if (threads <= 1) {
    for (long long b = 0; b < n_blocks; ++b) fn(b);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(threads));
  std::exception_ptr first_error;
  std::mutex error_mutex;
  for (long long t = 0; t < threads; ++t) {
    const long long lo = n_blocks * t / threads;
    const long long hi = n_blocks * (t + 1) / threads;
    pool.emplace_back([&, lo, hi] {
      try {
        for (long long b = lo; b < hi; ++b) fn(b);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

void enumerate_indices(int s, int budget, std::vector<int>& current,
                       std::vector<multi_index>& out) {
  if (static_cast<int>(current.size()) == s) {
    out.emplace_back(current);
    return;
  }
  for (int v = 0; v <= budget; ++v) {
    current.push_back(v);
    enumerate_indices(s, budget - v, current, out);
    current.pop_back();
  }
}

}  // namespace

quadrature_grid::quadrature_grid(int nodes_per_dim_, int dims_,
                                 long long node_budget_)
    : nodes_per_dim(nodes_per_dim_), dims(dims_), node_budget(node_budget_) {
  if (nodes_per_dim < 8)
    throw invalid_params("quadrature_grid: nodes_per_dim must be >= 8");
  if (dims < 1) throw invalid_params("quadrature_grid: dims must be >= 1");
  if (node_budget < 1)
    throw invalid_params("quadrature_grid: node_budget must be >= 1");
}

long long quadrature_grid::total_nodes() const {
  long long total = 1;
  for (int d = 0; d < dims; ++d) {
    if (total > node_budget / nodes_per_dim + 1)
      throw budget_exceeded("quadrature_grid: node count M^s exceeds budget");
    total *= nodes_per_dim;
  }
  if (total > node_budget)
    throw budget_exceeded("quadrature_grid: node count M^s = " +
                          std::to_string(total) + " exceeds budget " +
                          std::to_string(node_budget));
  return total;
}

double pairwise_tree_sum(std::span<const double> v) {
  if (v.empty()) return 0.0;
  if (v.size() == 1) return v[0];
  const size_t mid = v.size() / 2;
  return pairwise_tree_sum(v.first(mid)) + pairwise_tree_sum(v.subspan(mid));
}

double integrate_theta(const std::function<double(std::span<const double>)>& f,
                       const quadrature_grid& grid) {
  const long long total = grid.total_nodes();
  const int m = grid.nodes_per_dim;
  const long long n_blocks =
      (total + quadrature_block_size - 1) / quadrature_block_size;

  std::vector<double> block_sums(static_cast<size_t>(n_blocks), 0.0);
  for_each_block(n_blocks, [&](long long b) {
    const long long lo = b * quadrature_block_size;
    const long long hi = std::min(total, lo + quadrature_block_size);
    std::vector<double> thetas(static_cast<size_t>(grid.dims));
    double sum = 0.0;
    for (long long i = lo; i < hi; ++i) {
      decode_node(i, m, thetas);
      sum += f(thetas);
    }
    block_sums[static_cast<size_t>(b)] = sum;
  });

  const double cell = std::pow(pi / static_cast<double>(m), grid.dims);
  return pairwise_tree_sum(block_sums) * cell;
}

std::vector<multi_index> all_multi_indices(int s, int max_total) {
  if (s < 1) throw invalid_params("all_multi_indices: s must be >= 1");
  if (max_total < 0)
    throw invalid_params("all_multi_indices: max_total must be >= 0");
  std::vector<multi_index> out;
  std::vector<int> current;
  enumerate_indices(s, max_total, current, out);
  return out;
}

double gram_report::entry(int i, int j) const {
  const int k = static_cast<int>(indices.size());
  if (i < 0 || j < 0 || i >= k || j >= k)
    throw index_error("gram_report::entry: index out of range");
  return entries[static_cast<size_t>(i) * k + j];
}

void compute_report_metrics(gram_report& report) {
  const int k = static_cast<int>(report.indices.size());
  report.diag_rel_err.assign(static_cast<size_t>(k), 0.0);
  report.diag_rel_err_max = 0.0;
  report.offdiag_max = 0.0;
  for (int i = 0; i < k; ++i) {
    const double lambda = report.closed_form_norms[static_cast<size_t>(i)];
    const double rel = std::abs(report.entry(i, i) - lambda) / lambda;
    report.diag_rel_err[static_cast<size_t>(i)] = rel;
    report.diag_rel_err_max = std::max(report.diag_rel_err_max, rel);
    for (int j = 0; j < i; ++j) {
      const double scale =
          std::sqrt(lambda * report.closed_form_norms[static_cast<size_t>(j)]);
      report.offdiag_max =
          std::max(report.offdiag_max, std::abs(report.entry(i, j)) / scale);
    }
  }
}

gram_report gram(const family_spec& spec, int max_total_degree,
                 const quadrature_grid& grid) {
  if (grid.dims != spec.chain.s())
    throw invalid_params("gram: grid dimension must equal the family's s");
  const auto t0 = std::chrono::steady_clock::now();

  const long long total = grid.total_nodes();
  const int m = grid.nodes_per_dim;
  const int s = spec.chain.s();
  const std::vector<multi_index> indices = all_multi_indices(s, max_total_degree);
  const int k = static_cast<int>(indices.size());
  const int n_pairs = k * (k + 1) / 2;
  const long long n_blocks =
      (total + quadrature_block_size - 1) / quadrature_block_size;

  // partials[p * n_blocks + b]: block b's contribution to pair p
  std::vector<double> partials(
      static_cast<size_t>(n_pairs) * static_cast<size_t>(n_blocks), 0.0);

  for_each_block(n_blocks, [&](long long b) {
    const long long lo = b * quadrature_block_size;
    const long long hi = std::min(total, lo + quadrature_block_size);
    std::vector<double> thetas(static_cast<size_t>(s));
    std::vector<double> values(static_cast<size_t>(k));
    std::vector<double> acc(static_cast<size_t>(n_pairs), 0.0);
    for (long long node = lo; node < hi; ++node) {
      decode_node(node, m, thetas);
      const double w = mv_weight_theta(spec, thetas);
      for (int i = 0; i < k; ++i)
        values[static_cast<size_t>(i)] =
            mv_poly_theta(spec, indices[static_cast<size_t>(i)], thetas);
      int p = 0;
      for (int i = 0; i < k; ++i) {
        const double wi = w * values[static_cast<size_t>(i)];
        for (int j = i; j < k; ++j, ++p)
          acc[static_cast<size_t>(p)] += wi * values[static_cast<size_t>(j)];
      }
    }
    for (int p = 0; p < n_pairs; ++p)
      partials[static_cast<size_t>(p) * n_blocks + b] =
          acc[static_cast<size_t>(p)];
  });

  gram_report report{spec, max_total_degree, grid, indices, {}, {}, {}, 0.0,
                     0.0, total, 0.0};
  report.entries.assign(static_cast<size_t>(k) * k, 0.0);
  const double cell = std::pow(pi / static_cast<double>(m), s);
  {
    int p = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i; j < k; ++j, ++p) {
        const double value =
            pairwise_tree_sum(std::span<const double>(
                partials.data() + static_cast<size_t>(p) * n_blocks,
                static_cast<size_t>(n_blocks))) *
            cell;
        report.entries[static_cast<size_t>(i) * k + j] = value;
        report.entries[static_cast<size_t>(j) * k + i] = value;
      }
  }

  report.closed_form_norms.reserve(static_cast<size_t>(k));
  for (const multi_index& n : indices)
    report.closed_form_norms.push_back(mv_norm(spec, n));
  compute_report_metrics(report);

  report.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return report;
}

partial_integral_check verify_partial_integral(
    const family_spec& spec, const multi_index& n, const multi_index& m, int j,
    std::span<const double> theta_rest, const quadrature_grid& grid) {
  if (spec.kind != family_kind::mv_askey_wilson)
    throw invalid_params("verify_partial_integral: mv-aw kind only");
  const parameter_chain& ch = spec.chain;
  const int s = ch.s();
  if (j < 1 || j > s - 1)
    throw invalid_params("verify_partial_integral: require 1 <= j <= s-1");
  if (n.size() != s || m.size() != s)
    throw invalid_params("verify_partial_integral: degree vectors must have length s");
  if (static_cast<int>(theta_rest.size()) != s - j)
    throw invalid_params(
        "verify_partial_integral: theta_rest must hold theta_{j+1}..theta_s");
  if (grid.dims != j)
    throw invalid_params("verify_partial_integral: grid dimension must be j");
  for (double t : theta_rest)
    if (!(t > 0.0 && t < pi))
      throw domain_error("verify_partial_integral: fixed angle outside (0, pi)");

  const q_base q = ch.q();
  const double qv = q.value();
  const double theta_next = theta_rest[0];

  // truncated polynomial prod_{k=1}^{j} p_{deg_k}(x_k; ...), all couplings
  // present (the k = j factor couples to the fixed theta_{j+1})
  auto truncated_poly = [&](const multi_index& deg,
                            std::span<const double> thetas) {
    complex_t prod = 1.0;
    for (int k = 1; k <= j; ++k) {
      const double pref =
          ch.chain_product(2, k) * std::pow(qv, deg.sum(1, k - 1));
      const complex_t alpha = ch.a() * pref;
      const complex_t beta = ch.b() * pref;
      const double tk1 = (k < j) ? thetas[static_cast<size_t>(k)] : theta_next;
      const complex_t gamma =
          ch.chain_value(k + 1) * std::polar(1.0, tk1);
      prod *= aw_poly(deg.at(k),
                      point_on_interval::from_theta(thetas[static_cast<size_t>(k) - 1]),
                      aw_params{alpha, beta, gamma, std::conj(gamma), q});
    }
    return prod.real();
  };

  // rho^{(j)} in angle coordinates (the (1-x_k^2)^{-1/2} factors absorbed)
  auto truncated_weight = [&](std::span<const double> thetas) {
    complex_t w = 1.0;
    const complex_t e1p = std::polar(1.0, thetas[0]);
    const complex_t e1m = std::conj(e1p);
    w /= qpochhammer_inf(ch.a() * e1p, q) * qpochhammer_inf(ch.a() * e1m, q) *
         qpochhammer_inf(ch.b() * e1p, q) * qpochhammer_inf(ch.b() * e1m, q);
    for (int k = 1; k <= j; ++k) {
      const double tk = thetas[static_cast<size_t>(k) - 1];
      const double tk1 = (k < j) ? thetas[static_cast<size_t>(k)] : theta_next;
      const double ak1 = ch.chain_value(k + 1);
      const complex_t num = qpochhammer_inf(std::polar(1.0, 2.0 * tk), q) *
                            qpochhammer_inf(std::polar(1.0, -2.0 * tk), q);
      const complex_t den =
          qpochhammer_inf(ak1 * std::polar(1.0, tk1 + tk), q) *
          qpochhammer_inf(ak1 * std::polar(1.0, tk1 - tk), q) *
          qpochhammer_inf(ak1 * std::polar(1.0, tk - tk1), q) *
          qpochhammer_inf(ak1 * std::polar(1.0, -tk1 - tk), q);
      w *= num / den;
    }
    if (!(std::abs(w.imag()) <= 1e-9 * std::abs(w)))
      throw domain_error("verify_partial_integral: weight residue too large");
    return w.real();
  };

  const double lhs = integrate_theta(
      [&](std::span<const double> thetas) {
        return truncated_poly(n, thetas) * truncated_poly(m, thetas) *
               truncated_weight(thetas);
      },
      grid);

  // closed form: deltas, finite q-products, and the four coupling factors
  double rhs = std::pow(2.0 * pi, j);
  for (int k = 1; k <= j; ++k) {
    if (n.at(k) != m.at(k)) {
      rhs = 0.0;
      break;
    }
    const int nk = n.at(k);
    const int nsum = n.sum(1, k) + n.sum(1, k - 1);
    double a_this_sq = ch.left_boundary_sq();  // A_{1,k}^2 = a*b * prod a_i^2
    for (int i = 2; i <= k; ++i) {
      const double ai = ch.chain_value(i);
      a_this_sq *= ai * ai;
    }
    const double ak1 = ch.chain_value(k + 1);
    const double a_next_sq = a_this_sq * ak1 * ak1;
    const double num =
        qpochhammer(qv, q, nk) *
        qpochhammer(a_next_sq * std::pow(qv, nsum - 1), q, nk) *
        qpochhammer_inf(a_next_sq * std::pow(qv, 2 * n.sum(1, k)), q);
    const double den =
        qpochhammer_inf(qv, q) *
        qpochhammer_inf(a_this_sq * std::pow(qv, nsum), q) *
        qpochhammer_inf(ak1 * ak1 * std::pow(qv, nk), q);
    rhs *= num / den;
  }
  if (rhs != 0.0) {
    const double scale = ch.chain_product(2, j + 1) * std::pow(qv, n.sum(1, j));
    const complex_t ep = std::polar(1.0, theta_next);
    const complex_t em = std::conj(ep);
    const complex_t tail =
        qpochhammer_inf(ch.a() * scale * ep, q) *
        qpochhammer_inf(ch.a() * scale * em, q) *
        qpochhammer_inf(ch.b() * scale * ep, q) *
        qpochhammer_inf(ch.b() * scale * em, q);
    const complex_t full = rhs / tail;
    if (!(std::abs(full.imag()) <= 1e-9 * std::abs(full)))
      throw domain_error("verify_partial_integral: closed form residue too large");
    rhs = full.real();
  }

  return partial_integral_check{lhs, rhs};
}

}  // namespace qaskey
