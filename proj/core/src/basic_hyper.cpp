#include "qaskey/basic_hyper.hpp"

#include <cmath>

namespace qaskey {

complex_t eval_terminating_phi(const terminating_series_spec& spec) {
  if (spec.n < 0) throw invalid_params("eval_terminating_phi: n must be >= 0");
  const double qv = spec.q.value();

  complex_t sum = 1.0;
  complex_t term = 1.0;
  // q^{k-n} climbing from q^{-n}; tracked multiplicatively so the factor
  // (1 - q^{k-n}) is exact as written.
  double q_k_minus_n = std::pow(qv, -spec.n);
  double q_kp1 = qv;
  std::vector<complex_t> upper_qk(spec.upper.begin(), spec.upper.end());
  std::vector<complex_t> lower_qk(spec.lower.begin(), spec.lower.end());

  for (int k = 0; k < spec.n; ++k) {
    complex_t num = 1.0 - q_k_minus_n;
    for (complex_t& u : upper_qk) {
      num *= (1.0 - u);
      u *= qv;
    }
    complex_t den = 1.0 - q_kp1;
    for (complex_t& l : lower_qk) {
      complex_t factor = 1.0 - l;
      if (factor == complex_t(0.0))
        throw division_by_zero(
            "eval_terminating_phi: lower-parameter factor vanished at k = " +
            std::to_string(k));
      den *= factor;
      l *= qv;
    }
    term *= num / den * spec.z;
    sum += term;
    q_k_minus_n *= qv;
    q_kp1 *= qv;
  }
  return sum;
}

}  // namespace qaskey
