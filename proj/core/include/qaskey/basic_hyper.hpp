#pragma once

#include <vector>

#include "qaskey/qcore.hpp"

namespace qaskey {

/// A terminating r+1_phi_r series with top numerator parameter q^{-n}.
/// `upper` holds the remaining numerator parameters, `lower` the denominator
/// parameters; the argument z equals q in every polynomial use here but is
/// kept general.
struct terminating_series_spec {
  int n;
  std::vector<complex_t> upper;
  std::vector<complex_t> lower;
  q_base q;
  complex_t z;
};

/// Sum_{k=0}^{n} t_k with t_0 = 1 and the term-ratio recurrence
///
///   t_{k+1} / t_k = (1 - q^{k-n}) prod_i (1 - u_i q^k)
///                   ------------------------------------ * z .
///                   (1 - q^{k+1}) prod_j (1 - l_j q^k)
///
/// The factor (1 - q^{k-n}) is formed directly, never as a quotient of large
/// q^{-n} powers.  Throws division_by_zero if a denominator factor vanishes
/// at some k <= n-1 (i.e. a lower parameter equals q^{-m}, 0 <= m < n).
complex_t eval_terminating_phi(const terminating_series_spec& spec);

}  // namespace qaskey
