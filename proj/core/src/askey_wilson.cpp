#include "qaskey/askey_wilson.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace qaskey {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

complex_t pow_int(complex_t base, int exp) {
  if (exp < 0) return 1.0 / pow_int(base, -exp);
  complex_t r = 1.0;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

void require_real_admissible(const aw_params& p, const char* who) {
  for (complex_t v : {p.a, p.b, p.c, p.d}) {
    if (v.imag() != 0.0)
      throw invalid_params(std::string(who) + ": parameters must be real");
    if (!(std::abs(v.real()) < 1.0))
      throw invalid_params(std::string(who) +
                           ": parameter moduli must be < 1");
  }
}

}  // namespace

point_on_interval point_on_interval::from_theta(double theta) {
  if (!(theta > 0.0 && theta < std::numbers::pi))
    throw domain_error("point_on_interval: theta must lie in (0, pi), got " +
                       std::to_string(theta));
  return point_on_interval(theta, std::cos(theta));
}

point_on_interval point_on_interval::from_x(double x) {
  if (!(x > -1.0 && x < 1.0))
    throw domain_error("point_on_interval: x must lie in (-1, 1), got " +
                       std::to_string(x));
  return point_on_interval(std::acos(x), x);
}

complex_t aw_poly(int n, point_on_interval pt, const aw_params& p) {
  if (n < 0) throw invalid_params("aw_poly: n must be >= 0");
  if (p.a == complex_t(0.0))
    throw invalid_params(
        "aw_poly: a = 0 is not admitted; use dual_qhahn_poly or asc_poly");
  const complex_t eip = std::polar(1.0, pt.theta());
  const complex_t eim = std::conj(eip);
  const complex_t ab = p.a * p.b, ac = p.a * p.c, ad = p.a * p.d;
  const complex_t abcd = ab * (p.c * p.d);

  const std::array<complex_t, 3> pref{ab, ac, ad};
  const complex_t prefactor = pow_int(p.a, -n) * qpochhammer_multi(pref, p.q, n);

  terminating_series_spec series{
      n,
      {abcd * std::pow(p.q.value(), n - 1), p.a * eip, p.a * eim},
      {ab, ac, ad},
      p.q,
      complex_t(p.q.value())};
  return prefactor * eval_terminating_phi(series);
}

double aw_weight(point_on_interval pt, const aw_params& p, double tol) {
  require_real_admissible(p, "aw_weight");
  const double theta = pt.theta();
  const complex_t eip = std::polar(1.0, theta);
  const complex_t eim = std::conj(eip);
  const complex_t e2p = std::polar(1.0, 2.0 * theta);
  const complex_t e2m = std::conj(e2p);

  complex_t num = qpochhammer_inf(e2p, p.q) * qpochhammer_inf(e2m, p.q);
  complex_t den = 1.0;
  for (complex_t v : {p.a, p.b, p.c, p.d})
    den *= qpochhammer_inf(v * eip, p.q) * qpochhammer_inf(v * eim, p.q);

  // (1 - x^2)^{-1/2} = 1 / sin(theta) on (0, pi)
  const complex_t w = num / den / std::sin(theta);
  if (!(std::abs(w.imag()) <= tol * std::abs(w)))
    throw domain_error("aw_weight: imaginary residue exceeds tolerance");
  if (!(w.real() > 0.0) || !std::isfinite(w.real()))
    throw domain_error("aw_weight: non-positive weight sample");
  return w.real();
}

double aw_norm(int n, const aw_params& p) {
  if (n < 0) throw invalid_params("aw_norm: n must be >= 0");
  require_real_admissible(p, "aw_norm");
  const double a = p.a.real(), b = p.b.real(), c = p.c.real(), d = p.d.real();
  const double qv = p.q.value();
  const double ab = a * b, ac = a * c, ad = a * d;
  const double bc = b * c, bd = b * d, cd = c * d;
  const double abcd = ab * cd;

  double inf_den = qpochhammer_inf(qv, p.q);
  for (double v : {ab, ac, ad, bc, bd, cd}) inf_den *= qpochhammer_inf(v, p.q);
  const double head = two_pi * qpochhammer_inf(abcd, p.q) / inf_den;

  double fin_num = qpochhammer(qv, p.q, n);
  for (double v : {ab, ac, ad, bc, bd, cd}) fin_num *= qpochhammer(v, p.q, n);
  const double abcd_qm1 = abcd / qv;
  fin_num *= (1.0 - abcd_qm1);
  const double fin_den =
      qpochhammer(abcd_qm1, p.q, n) * (1.0 - abcd * std::pow(qv, 2 * n - 1));

  const double lambda = head * fin_num / fin_den;
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw domain_error("aw_norm: norm not strictly positive");
  return lambda;
}

complex_t dual_qhahn_poly(int n, point_on_interval pt, complex_t a, complex_t b,
                          complex_t c, q_base q) {
  if (n < 0) throw invalid_params("dual_qhahn_poly: n must be >= 0");
  if (a == complex_t(0.0))
    throw invalid_params("dual_qhahn_poly: a = 0 is not admitted (use asc_poly "
                         "or permute the symmetric parameters)");
  const complex_t eip = std::polar(1.0, pt.theta());
  const complex_t eim = std::conj(eip);
  const complex_t ab = a * b, ac = a * c;

  const std::array<complex_t, 2> pref{ab, ac};
  const complex_t prefactor = pow_int(a, -n) * qpochhammer_multi(pref, q, n);

  terminating_series_spec series{
      n, {a * eip, a * eim}, {ab, ac}, q, complex_t(q.value())};
  return prefactor * eval_terminating_phi(series);
}

complex_t asc_poly(int n, point_on_interval pt, complex_t b, complex_t c,
                   q_base q) {
  if (n < 0) throw invalid_params("asc_poly: n must be >= 0");
  if (b == complex_t(0.0))
    throw invalid_params("asc_poly: b = 0 is not admitted");
  const complex_t eip = std::polar(1.0, pt.theta());
  const complex_t eim = std::conj(eip);
  const complex_t bc = b * c;

  const complex_t prefactor = pow_int(b, -n) * qpochhammer(bc, q, n);

  terminating_series_spec series{
      n, {b * eip, b * eim}, {bc, complex_t(0.0)}, q, complex_t(q.value())};
  return prefactor * eval_terminating_phi(series);
}

namespace {

aw_specialization make_specialization(specialization_kind kind, complex_t a,
                                      complex_t b, complex_t c, complex_t d,
                                      q_base q, double shift = 0.0) {
  for (complex_t v : {a, b, c, d})
    if (!(std::abs(v) < 1.0))
      throw invalid_params(
          "specialize: substituted parameter modulus must be < 1");
  return aw_specialization{kind, aw_params{a, b, c, d, q}, shift};
}

}  // namespace

aw_specialization specialize_q_jacobi(double alpha, double beta,
                                           q_base q) {
  const double qv = q.value();
  return make_specialization(specialization_kind::q_jacobi,
                             std::pow(qv, (2.0 * alpha + 1.0) / 4.0),
                             std::pow(qv, (2.0 * alpha + 3.0) / 4.0),
                             -std::pow(qv, (2.0 * beta + 1.0) / 4.0),
                             -std::pow(qv, (2.0 * beta + 3.0) / 4.0), q);
}

aw_specialization specialize_q_jacobi_alt(double alpha, double beta,
                                           q_base q) {
  const double qv = q.value();
  return make_specialization(specialization_kind::q_jacobi_alt,
                             std::sqrt(qv), std::pow(qv, alpha + 0.5),
                             -std::pow(qv, beta + 0.5), -std::sqrt(qv), q);
}

aw_specialization specialize_q_ultraspherical(double lambda, q_base q) {
  auto s = specialize_q_jacobi_alt(lambda - 0.5, lambda - 0.5, q);
  s.kind = specialization_kind::q_ultraspherical;
  return s;
}

aw_specialization specialize_q_hermite(q_base q) {
  const double r = std::sqrt(q.value());
  return make_specialization(specialization_kind::q_hermite, r, 0.0, 0.0, -r,
                             q);
}

aw_specialization specialize_continuous_q_hahn(double a1, double as1,
                                               double phi, q_base q) {
  const complex_t eip = std::polar(1.0, phi);
  const complex_t eim = std::conj(eip);
  return make_specialization(specialization_kind::continuous_q_hahn, a1 * eip,
                             a1 * eim, as1 * eip, as1 * eim, q, phi);
}

complex_t eval_specialized(const aw_specialization& fam, int n, double theta) {
  if (fam.theta_shift == 0.0)
    return aw_poly(n, point_on_interval::from_theta(theta), fam.params);
  // cos is even and 2pi-periodic and the polynomial depends on the angle only
  // through its cosine, so the shifted angle folds back into (0, pi) exactly.
  const double x = std::cos(theta + fam.theta_shift);
  return aw_poly(n, point_on_interval::from_x(x), fam.params);
}

}  // namespace qaskey
