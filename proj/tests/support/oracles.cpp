#include "oracles.hpp"

#include <cmath>
#include <numbers>

namespace oracles {

namespace {
constexpr double pi = std::numbers::pi;
}

cx poch_finite(cx a, double q, int n) {
  cx prod = 1.0;
  for (int k = 0; k < n; ++k) prod *= (1.0 - a * std::pow(q, k));
  return prod;
}

cx poch_partial(cx a, double q, int terms) {
  cx prod = 1.0;
  for (int k = 0; k < terms; ++k) prod *= (1.0 - a * std::pow(q, k));
  return prod;
}

double euler_phi(double q, int kmax) {
  double sum = 1.0;  // k = 0 term
  for (int k = 1; k <= kmax; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    sum += sign * (std::pow(q, 0.5 * k * (3.0 * k - 1.0)) +
                   std::pow(q, 0.5 * k * (3.0 * k + 1.0)));
  }
  return sum;
}

cx naive_phi(int n, const std::vector<cx>& upper, const std::vector<cx>& lower,
             double q, cx z) {
  cx sum = 0.0;
  const double q_neg_n = std::pow(q, -n);
  for (int k = 0; k <= n; ++k) {
    cx term = poch_finite(q_neg_n, q, k);
    for (cx u : upper) term *= poch_finite(u, q, k);
    term /= poch_finite(q, q, k);
    for (cx l : lower) term /= poch_finite(l, q, k);
    for (int i = 0; i < k; ++i) term *= z;
    sum += term;
  }
  return sum;
}

double naive_phi_scale(int n, const std::vector<cx>& upper,
                       const std::vector<cx>& lower, double q, cx z) {
  double scale = 0.0;
  const double q_neg_n = std::pow(q, -n);
  for (int k = 0; k <= n; ++k) {
    cx term = poch_finite(q_neg_n, q, k);
    for (cx u : upper) term *= poch_finite(u, q, k);
    term /= poch_finite(q, q, k);
    for (cx l : lower) term /= poch_finite(l, q, k);
    for (int i = 0; i < k; ++i) term *= z;
    scale += std::abs(term);
  }
  return scale;
}

double aw_poly_scale(int n, double theta, cx a, cx b, cx c, cx d, double q) {
  const cx eip = std::polar(1.0, theta);
  const cx ab = a * b, ac = a * c, ad = a * d;
  double pre = std::abs(poch_finite(ab, q, n) * poch_finite(ac, q, n) *
                        poch_finite(ad, q, n));
  pre /= std::pow(std::abs(a), n);
  return pre * naive_phi_scale(
                   n, {ab * (c * d) * std::pow(q, n - 1), a * eip,
                       a * std::conj(eip)},
                   {ab, ac, ad}, q, cx(q));
}

cx aw_poly_direct(int n, double theta, cx a, cx b, cx c, cx d, double q) {
  const cx eip = std::polar(1.0, theta);
  const cx eim = std::conj(eip);
  const cx ab = a * b, ac = a * c, ad = a * d;
  cx pre = poch_finite(ab, q, n) * poch_finite(ac, q, n) * poch_finite(ad, q, n);
  pre /= std::pow(a, n);
  const cx series = naive_phi(
      n, {ab * (c * d) * std::pow(q, n - 1), a * eip, a * eim}, {ab, ac, ad}, q,
      cx(q));
  return pre * series;
}

double aw_weight_direct(double theta, double a, double b, double c, double d,
                        double q, int terms) {
  const cx eip = std::polar(1.0, theta);
  const cx eim = std::conj(eip);
  const cx num = poch_partial(std::polar(1.0, 2.0 * theta), q, terms) *
                 poch_partial(std::polar(1.0, -2.0 * theta), q, terms);
  cx den = 1.0;
  for (double v : {a, b, c, d})
    den *= poch_partial(v * eip, q, terms) * poch_partial(v * eim, q, terms);
  const cx w = num / den / std::sin(theta);
  return w.real();
}

double aw_norm_direct(int n, double a, double b, double c, double d, double q,
                      int terms) {
  const double ab = a * b, ac = a * c, ad = a * d;
  const double bc = b * c, bd = b * d, cd = c * d;
  const double abcd = ab * cd;
  double head = 2.0 * pi * poch_partial(abcd, q, terms).real();
  for (double v : {q, ab, ac, ad, bc, bd, cd})
    head /= poch_partial(v, q, terms).real();
  double fin = 1.0;
  for (double v : {q, ab, ac, ad, bc, bd, cd})
    fin *= poch_finite(v, q, n).real();
  fin *= (1.0 - abcd / q);
  fin /= poch_finite(abcd / q, q, n).real() *
         (1.0 - abcd * std::pow(q, 2 * n - 1));
  return head * fin;
}

double mv2_poly_direct(int n1, int n2, double theta1, double theta2, double a,
                       double b, double c, double d, double a2, double q) {
  const cx coupling = a2 * std::polar(1.0, theta2);
  const cx f1 =
      aw_poly_direct(n1, theta1, a, b, coupling, std::conj(coupling), q);
  const double shift = a2 * std::pow(q, n1);
  const cx f2 = aw_poly_direct(n2, theta2, a * shift, b * shift, c, d, q);
  return (f1 * f2).real();
}

std::vector<double> cheb_fit(const std::function<double(double)>& f, int npts) {
  std::vector<double> fx(npts);
  for (int j = 0; j < npts; ++j)
    fx[j] = f(std::cos(pi * (j + 0.5) / npts));
  std::vector<double> coeffs(npts, 0.0);
  for (int k = 0; k < npts; ++k) {
    double sum = 0.0;
    for (int j = 0; j < npts; ++j)
      sum += fx[j] * std::cos(pi * k * (j + 0.5) / npts);
    coeffs[k] = sum * ((k == 0) ? 1.0 : 2.0) / npts;
  }
  return coeffs;
}

double cheb_eval(const std::vector<double>& coeffs, double x) {
  // Clenshaw recurrence
  double b1 = 0.0, b2 = 0.0;
  for (size_t k = coeffs.size(); k-- > 1;) {
    const double b0 = 2.0 * x * b1 - b2 + coeffs[k];
    b2 = b1;
    b1 = b0;
  }
  return x * b1 - b2 + coeffs[0];
}

std::vector<double> cheb_fit_2d(const std::function<double(double, double)>& f,
                                int npts) {
  std::vector<double> fx(static_cast<size_t>(npts) * npts);
  for (int i = 0; i < npts; ++i)
    for (int j = 0; j < npts; ++j)
      fx[static_cast<size_t>(i) * npts + j] =
          f(std::cos(pi * (i + 0.5) / npts), std::cos(pi * (j + 0.5) / npts));
  std::vector<double> coeffs(static_cast<size_t>(npts) * npts, 0.0);
  for (int k1 = 0; k1 < npts; ++k1)
    for (int k2 = 0; k2 < npts; ++k2) {
      double sum = 0.0;
      for (int i = 0; i < npts; ++i)
        for (int j = 0; j < npts; ++j)
          sum += fx[static_cast<size_t>(i) * npts + j] *
                 std::cos(pi * k1 * (i + 0.5) / npts) *
                 std::cos(pi * k2 * (j + 0.5) / npts);
      const double norm1 = (k1 == 0) ? 1.0 : 2.0;
      const double norm2 = (k2 == 0) ? 1.0 : 2.0;
      coeffs[static_cast<size_t>(k1) * npts + k2] =
          sum * norm1 * norm2 / (static_cast<double>(npts) * npts);
    }
  return coeffs;
}

}  // namespace oracles
