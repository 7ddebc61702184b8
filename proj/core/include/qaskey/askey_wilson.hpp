#pragma once

#include "qaskey/basic_hyper.hpp"
#include "qaskey/qcore.hpp"

namespace qaskey {

/// The four-parameter tuple of p_n(x; a, b, c, d | q).  For orthogonality
/// (weight, norm) the parameters must be real with modulus < 1; evaluation
/// also accepts complex parameters, as the multivariable construction feeds
/// conjugate pairs a_{k+1} e^{+-i theta_{k+1}} into the c, d slots.
struct aw_params {
  complex_t a, b, c, d;
  q_base q;
};

/// A point x = cos(theta) of the open interval (-1, 1); theta in (0, pi) is
/// authoritative, x is derived.
class point_on_interval {
 public:
  static point_on_interval from_theta(double theta);
  static point_on_interval from_x(double x);

  double theta() const noexcept { return theta_; }
  double x() const noexcept { return x_; }

 private:
  point_on_interval(double theta, double x) : theta_(theta), x_(x) {}
  double theta_;
  double x_;
};

/// Askey-Wilson polynomial
///   p_n(x; a,b,c,d | q) = a^{-n} (ab, ac, ad; q)_n
///     * 4phi3[ q^{-n}, abcd q^{n-1}, a e^{i theta}, a e^{-i theta} ;
///              ab, ac, ad ; q, q ].
/// Requires a != 0; the a = 0 degenerations are the dedicated families
/// dual_qhahn_poly and asc_poly.  The value is real (up to roundoff) for real
/// parameters and for conjugate-pair parameters.
complex_t aw_poly(int n, point_on_interval pt, const aw_params& p);

/// Weight rho(x | q) of the orthogonality relation on (-1, 1):
///   (e^{2i theta}, e^{-2i theta}; q)_inf (1 - x^2)^{-1/2}
///   / (a e^{i theta}, a e^{-i theta}, ..., d e^{-i theta}; q)_inf .
/// Real parameters with modulus < 1 only; computed through complex infinite
/// products with the imaginary residue asserted below tol (relative).
double aw_weight(point_on_interval pt, const aw_params& p, double tol = 1e-9);

/// Closed-form norm
///   lambda_n(q) = 2 pi (abcd; q)_inf / (q, ab, ac, ad, bc, bd, cd; q)_inf
///     * (q, ab, ac, ad, bc, bd, cd; q)_n (1 - abcd q^{-1})
///       / ( (abcd q^{-1}; q)_n (1 - abcd q^{2n-1}) ).
/// Real parameters with modulus < 1; strictly positive.
double aw_norm(int n, const aw_params& p);

/// Continuous dual q-Hahn polynomial
///   d_n(x; a,b,c | q) = a^{-n} (ab, ac; q)_n
///     * 3phi2[ q^{-n}, a e^{i theta}, a e^{-i theta} ; ab, ac ; q, q ],
/// symmetric in (a, b, c); evaluated with the caller's slot order.
complex_t dual_qhahn_poly(int n, point_on_interval pt, complex_t a, complex_t b,
                          complex_t c, q_base q);

/// Al-Salam-Chihara polynomial
///   p_n(x; b,c | q) = b^{-n} (bc; q)_n
///     * 3phi2[ q^{-n}, b e^{i theta}, b e^{-i theta} ; bc, 0 ; q, q ].
complex_t asc_poly(int n, point_on_interval pt, complex_t b, complex_t c,
                   q_base q);

enum class specialization_kind {
  q_jacobi,
  q_jacobi_alt,
  q_ultraspherical,
  q_hermite,
  continuous_q_hahn,
};

/// Substituted Askey-Wilson parameters plus the evaluation convention for the
/// continuous q-Hahn case, where the point is cos(theta + theta_shift).
struct aw_specialization {
  specialization_kind kind;
  aw_params params;
  double theta_shift = 0.0;
};

/// a = q^{(2 alpha + 1)/4}, b = q^{(2 alpha + 3)/4},
/// c = -q^{(2 beta + 1)/4}, d = -q^{(2 beta + 3)/4}.
aw_specialization specialize_q_jacobi(double alpha, double beta, q_base q);

/// a = q^{1/2}, b = q^{alpha + 1/2}, c = -q^{beta + 1/2}, d = -q^{1/2}.
aw_specialization specialize_q_jacobi_alt(double alpha, double beta, q_base q);

/// The alpha = beta = lambda - 1/2 case of specialize_q_jacobi_alt.
aw_specialization specialize_q_ultraspherical(double lambda, q_base q);

/// a = -d = q^{1/2}, b = c = 0.
aw_specialization specialize_q_hermite(q_base q);

/// a -> a1 e^{i phi}, b -> a1 e^{-i phi}, c -> as1 e^{i phi},
/// d -> as1 e^{-i phi}, with evaluation at cos(theta + phi).
aw_specialization specialize_continuous_q_hahn(double a1, double as1,
                                               double phi, q_base q);

/// Evaluates the specialized polynomial at angle theta, applying the family's
/// angle shift (the shifted angle is folded back into (0, pi); the value
/// depends on the point only through cos of the shifted angle).
complex_t eval_specialized(const aw_specialization& fam, int n, double theta);

}  // namespace qaskey
