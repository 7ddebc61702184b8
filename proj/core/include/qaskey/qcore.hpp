#pragma once

#include <complex>
#include <span>
#include <vector>

#include "qaskey/errors.hpp"

namespace qaskey {

using complex_t = std::complex<double>;

/// The base q of all q-shifted factorials, restricted to real 0 < q < 1.
class q_base {
 public:
  explicit q_base(double q) : q_(q) {
    if (!(q > 0.0 && q < 1.0))
      throw invalid_params("q must satisfy 0 < q < 1, got " + std::to_string(q));
  }
  double value() const noexcept { return q_; }

 private:
  double q_;
};

/// Finite q-shifted factorial (a;q)_n = prod_{k=0}^{n-1} (1 - a q^k),
/// evaluated left to right in ascending k.
complex_t qpochhammer(complex_t a, q_base q, int n);
double qpochhammer(double a, q_base q, int n);

inline constexpr double default_qpoch_tol = 1e-15;
inline constexpr long qpoch_inf_iteration_cap = 1'000'000;

/// Infinite q-shifted factorial (a;q)_inf, truncated at the first k with
/// |a| q^k < tol * (1 - q).  The dropped tail satisfies
/// |log prod_{j>=k} (1 - a q^j)| <= |a| q^k / (1 - q) < tol (for |a|q^k <= 1/2
/// up to a factor ~2), so the relative truncation error is bounded by ~2*tol.
/// Throws non_convergence if the bound is not reached within the cap.
complex_t qpochhammer_inf(complex_t a, q_base q, double tol = default_qpoch_tol);
double qpochhammer_inf(double a, q_base q, double tol = default_qpoch_tol);

/// Compound symbol (a_1, ..., a_r; q)_n = prod_i (a_i; q)_n.
complex_t qpochhammer_multi(std::span<const complex_t> list, q_base q, int n);

/// Compound symbol (a_1, ..., a_r; q)_inf.
complex_t qpochhammer_multi_inf(std::span<const complex_t> list, q_base q,
                                double tol = default_qpoch_tol);
double qpochhammer_multi_inf(std::span<const double> list, q_base q,
                             double tol = default_qpoch_tol);

/// Degree vector n = (n_1, ..., n_s), s >= 1, entries >= 0.
/// Index arguments follow the 1-based convention of the partial sums
/// N_{j,k} = sum_{i=j}^{k} n_i, with the empty-sum rule N_{k+1,k} = 0.
class multi_index {
 public:
  explicit multi_index(std::vector<int> n);

  int size() const noexcept { return static_cast<int>(n_.size()); }
  /// n_k, 1-based, 1 <= k <= s.
  int at(int k) const;
  /// N_{j,k}; valid for 1 <= j <= k+1 and 0 <= k <= s, returns 0 when j = k+1.
  int sum(int j, int k) const;
  /// Total degree N_s.
  int total() const { return sum(1, size()); }
  const std::vector<int>& values() const noexcept { return n_; }

  bool operator==(const multi_index& other) const { return n_ == other.n_; }

 private:
  std::vector<int> n_;
};

/// Parameter tuple (q; a, b, c, d; a_2, ..., a_s) with the boundary squares
/// a_1^2 = a*b and a_{s+1}^2 = c*d kept as products, never square-rooted.
/// All stored parameters are real with modulus < 1.
class parameter_chain {
 public:
  parameter_chain(q_base q, double a, double b, double c, double d,
                  std::vector<double> chain);

  q_base q() const noexcept { return q_; }
  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double c() const noexcept { return c_; }
  double d() const noexcept { return d_; }
  int s() const noexcept { return static_cast<int>(chain_.size()) + 1; }

  /// a_i for 2 <= i <= s (a_1 and a_{s+1} exist only through their squares).
  double chain_value(int i) const;
  const std::vector<double>& chain() const noexcept { return chain_; }

  /// A_{j,k} = prod_{i=j}^{k} a_i over the stored chain entries; requires
  /// 2 <= j <= k+1 and k <= s, returns 1 when j = k+1.  j = 1 is rejected:
  /// a_1 is defined only through a_1^2 = a*b (use boundary squares instead).
  double chain_product(int j, int k) const;

  /// a_1^2 = a*b and a_{s+1}^2 = c*d.
  double left_boundary_sq() const noexcept { return a_ * b_; }
  double right_boundary_sq() const noexcept { return c_ * d_; }

 private:
  q_base q_;
  double a_, b_, c_, d_;
  std::vector<double> chain_;  // a_2, ..., a_s
};

}  // namespace qaskey
