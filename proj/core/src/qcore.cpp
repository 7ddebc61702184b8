#include "qaskey/qcore.hpp"

#include <cmath>
#include <cstdlib>

namespace qaskey {

complex_t qpochhammer(complex_t a, q_base q, int n) {
  if (n < 0) throw invalid_params("qpochhammer: n must be >= 0");
  complex_t prod = 1.0;
  complex_t aqk = a;
  for (int k = 0; k < n; ++k) {
    prod *= (1.0 - aqk);
    aqk *= q.value();
  }
  return prod;
}

double qpochhammer(double a, q_base q, int n) {
  if (n < 0) throw invalid_params("qpochhammer: n must be >= 0");
  double prod = 1.0;
  double aqk = a;
  for (int k = 0; k < n; ++k) {
    prod *= (1.0 - aqk);
    aqk *= q.value();
  }
  return prod;
}

namespace {

template <typename T>
T qpoch_inf_impl(T a, q_base q, double tol) {
  if (!(tol > 0.0)) throw invalid_params("qpochhammer_inf: tol must be > 0");
  const double qv = q.value();
  const double bound = tol * (1.0 - qv);
  T prod = 1.0;
  T aqk = a;
  for (long k = 0; k < qpoch_inf_iteration_cap; ++k) {
    if (std::abs(aqk) < bound) return prod;
    prod *= (1.0 - aqk);
    aqk *= qv;
  }
  throw non_convergence(
      "qpochhammer_inf: truncation bound not reached within iteration cap "
      "(q too close to 1)");
}

}  // namespace

complex_t qpochhammer_inf(complex_t a, q_base q, double tol) {
  return qpoch_inf_impl(a, q, tol);
}

double qpochhammer_inf(double a, q_base q, double tol) {
  return qpoch_inf_impl(a, q, tol);
}

complex_t qpochhammer_multi(std::span<const complex_t> list, q_base q, int n) {
  if (list.empty()) throw invalid_params("qpochhammer_multi: empty list");
  complex_t prod = 1.0;
  for (complex_t a : list) prod *= qpochhammer(a, q, n);
  return prod;
}

complex_t qpochhammer_multi_inf(std::span<const complex_t> list, q_base q,
                                double tol) {
  if (list.empty()) throw invalid_params("qpochhammer_multi_inf: empty list");
  complex_t prod = 1.0;
  for (complex_t a : list) prod *= qpochhammer_inf(a, q, tol);
  return prod;
}

double qpochhammer_multi_inf(std::span<const double> list, q_base q,
                             double tol) {
  if (list.empty()) throw invalid_params("qpochhammer_multi_inf: empty list");
  double prod = 1.0;
  for (double a : list) prod *= qpochhammer_inf(a, q, tol);
  return prod;
}

multi_index::multi_index(std::vector<int> n) : n_(std::move(n)) {
  if (n_.empty()) throw invalid_params("multi_index: length s must be >= 1");
  for (int v : n_)
    if (v < 0) throw invalid_params("multi_index: entries must be >= 0");
}

int multi_index::at(int k) const {
  if (k < 1 || k > size())
    throw index_error("multi_index::at: k out of range [1, s]");
  return n_[static_cast<size_t>(k) - 1];
}

int multi_index::sum(int j, int k) const {
  if (k < 0 || k > size() || j < 1 || j > k + 1)
    throw index_error("multi_index::sum: require 1 <= j <= k+1, 0 <= k <= s");
  int total = 0;
  for (int i = j; i <= k; ++i) total += n_[static_cast<size_t>(i) - 1];
  return total;
}

parameter_chain::parameter_chain(q_base q, double a, double b, double c,
                                 double d, std::vector<double> chain)
    : q_(q), a_(a), b_(b), c_(c), d_(d), chain_(std::move(chain)) {
  auto check = [](double v, const char* name) {
    if (!(std::abs(v) < 1.0))
      throw invalid_params(std::string("parameter_chain: |") + name +
                           "| must be < 1, got " + std::to_string(v));
  };
  check(a_, "a");
  check(b_, "b");
  check(c_, "c");
  check(d_, "d");
  for (size_t i = 0; i < chain_.size(); ++i)
    check(chain_[i], ("a_" + std::to_string(i + 2)).c_str());
}

double parameter_chain::chain_value(int i) const {
  if (i < 2 || i > s())
    throw index_error("parameter_chain::chain_value: i out of range [2, s]");
  return chain_[static_cast<size_t>(i) - 2];
}

double parameter_chain::chain_product(int j, int k) const {
  if (j < 2 || k > s() || j > k + 1)
    throw index_error(
        "parameter_chain::chain_product: require 2 <= j <= k+1, k <= s");
  double prod = 1.0;
  for (int i = j; i <= k; ++i) prod *= chain_value(i);
  return prod;
}

}  // namespace qaskey
