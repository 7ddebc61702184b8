#include "qaskey/multivar.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qaskey {

namespace {

complex_t unit_phase(double theta) { return std::polar(1.0, theta); }

// A_{1,m}^2 = a*b * prod_{i=2}^{m} a_i^2 with a_{s+1}^2 = c*d; m in 0..s+1
// (m = 0 gives the empty product 1).
double a1_squared_product(const parameter_chain& ch, int m) {
  if (m < 0 || m > ch.s() + 1)
    throw index_error("a1_squared_product: m out of range [0, s+1]");
  if (m == 0) return 1.0;
  double v = ch.left_boundary_sq();
  for (int i = 2; i <= std::min(m, ch.s()); ++i) {
    const double ai = ch.chain_value(i);
    v *= ai * ai;
  }
  if (m == ch.s() + 1) v *= ch.right_boundary_sq();
  return v;
}

// A_{k,s+1}^2 = prod_{i=k}^{s+1} a_i^2 with a_1^2 = a*b, a_{s+1}^2 = c*d;
// k in 1..s+1.
double tail_squared_product(const parameter_chain& ch, int k) {
  if (k < 1 || k > ch.s() + 1)
    throw index_error("tail_squared_product: k out of range [1, s+1]");
  double v = (k == 1) ? ch.left_boundary_sq() : 1.0;
  for (int i = std::max(k, 2); i <= ch.s(); ++i) {
    const double ai = ch.chain_value(i);
    v *= ai * ai;
  }
  v *= ch.right_boundary_sq();
  return v;
}

// a_i^2 with the boundary conventions a_1^2 = left_sq, a_{s+1}^2 = right_sq.
double boundary_square(const parameter_chain& ch, int i, double left_sq,
                       double right_sq) {
  if (i == 1) return left_sq;
  if (i == ch.s() + 1) return right_sq;
  const double ai = ch.chain_value(i);
  return ai * ai;
}

void check_lengths(const family_spec& spec, const multi_index& n,
                   std::span<const double> thetas) {
  if (n.size() != spec.chain.s() ||
      static_cast<int>(thetas.size()) != spec.chain.s())
    throw invalid_params(
        "multivar: degree vector, point and chain must share the length s");
}

}  // namespace

multi_point::multi_point(std::vector<double> thetas)
    : thetas_(std::move(thetas)) {
  if (thetas_.empty()) throw invalid_params("multi_point: s must be >= 1");
  for (double t : thetas_)
    if (!(t > 0.0 && t < std::numbers::pi))
      throw domain_error("multi_point: every theta_k must lie in (0, pi)");
}

double multi_point::theta(int k) const {
  if (k < 1 || k > size())
    throw index_error("multi_point::theta: k out of range [1, s]");
  return thetas_[static_cast<size_t>(k) - 1];
}

const char* family_kind_name(family_kind kind) {
  switch (kind) {
    case family_kind::mv_askey_wilson: return "mv-aw";
    case family_kind::mv_askey_wilson_tilde: return "mv-aw-tilde";
    case family_kind::mv_dual_q_hahn: return "mv-dual-qhahn";
    case family_kind::mv_al_salam_chihara: return "mv-asc";
  }
  return "?";
}

family_spec make_mv_askey_wilson(parameter_chain chain) {
  return family_spec{family_kind::mv_askey_wilson, std::move(chain)};
}

family_spec make_mv_askey_wilson_tilde(parameter_chain chain) {
  return family_spec{family_kind::mv_askey_wilson_tilde, std::move(chain)};
}

family_spec make_mv_dual_q_hahn(q_base q, double a, double b, double c,
                                std::vector<double> chain) {
  return family_spec{family_kind::mv_dual_q_hahn,
                     parameter_chain(q, a, b, c, 0.0, std::move(chain))};
}

family_spec make_mv_al_salam_chihara(q_base q, double b, double c,
                                     std::vector<double> chain) {
  return family_spec{family_kind::mv_al_salam_chihara,
                     parameter_chain(q, 0.0, b, c, 0.0, std::move(chain))};
}

double mv_poly_theta(const family_spec& spec, const multi_index& n,
                     std::span<const double> thetas) {
  check_lengths(spec, n, thetas);
  const parameter_chain& ch = spec.chain;
  const q_base q = ch.q();
  const double qv = q.value();
  const int s = ch.s();
  complex_t prod = 1.0;

  switch (spec.kind) {
    case family_kind::mv_askey_wilson: {
      for (int k = 1; k <= s; ++k) {
        const double pref = ch.chain_product(2, k) * std::pow(qv, n.sum(1, k - 1));
        const complex_t alpha = ch.a() * pref;
        const complex_t beta = ch.b() * pref;
        complex_t gamma, delta;
        if (k < s) {
          gamma = ch.chain_value(k + 1) * unit_phase(thetas[k]);
          delta = std::conj(gamma);
        } else {
          gamma = ch.c();
          delta = ch.d();
        }
        prod *= aw_poly(n.at(k), point_on_interval::from_theta(thetas[k - 1]),
                        aw_params{alpha, beta, gamma, delta, q});
      }
      break;
    }
    case family_kind::mv_askey_wilson_tilde: {
      for (int k = 1; k <= s; ++k) {
        const double pref =
            ch.chain_product(k + 1, s) * std::pow(qv, n.sum(k + 1, s));
        const complex_t alpha = ch.c() * pref;
        const complex_t beta = ch.d() * pref;
        complex_t gamma, delta;
        if (k == 1) {
          gamma = ch.a();
          delta = ch.b();
        } else {
          gamma = ch.chain_value(k) * unit_phase(thetas[k - 2]);
          delta = std::conj(gamma);
        }
        prod *= aw_poly(n.at(k), point_on_interval::from_theta(thetas[k - 1]),
                        aw_params{alpha, beta, gamma, delta, q});
      }
      break;
    }
    case family_kind::mv_dual_q_hahn: {
      for (int k = 1; k <= s; ++k) {
        const complex_t last =
            ch.a() * ch.chain_product(2, k) * std::pow(qv, n.sum(1, k - 1));
        complex_t first, second;
        if (k < s) {
          first = ch.chain_value(k + 1) * unit_phase(thetas[k]);
          second = std::conj(first);
        } else {
          first = ch.b();
          second = ch.c();
        }
        prod *= dual_qhahn_poly(n.at(k),
                                point_on_interval::from_theta(thetas[k - 1]),
                                first, second, last, q);
      }
      break;
    }
    case family_kind::mv_al_salam_chihara: {
      for (int k = 1; k <= s; ++k) {
        complex_t first, second;
        if (k < s) {
          first = ch.chain_value(k + 1) * unit_phase(thetas[k]);
          second = std::conj(first);
        } else {
          first = ch.b();
          second = ch.c();
        }
        prod *= asc_poly(n.at(k), point_on_interval::from_theta(thetas[k - 1]),
                         first, second, q);
      }
      break;
    }
  }
  return prod.real();
}

double mv_poly(const family_spec& spec, const multi_index& n,
               const multi_point& pt) {
  return mv_poly_theta(spec, n, pt.thetas());
}

double mv_weight_theta(const family_spec& spec, std::span<const double> thetas,
                       double tol) {
  const parameter_chain& ch = spec.chain;
  const q_base q = ch.q();
  const int s = ch.s();
  if (static_cast<int>(thetas.size()) != s)
    throw invalid_params("mv_weight: point length must equal s");
  for (double t : thetas)
    if (!(t > 0.0 && t < std::numbers::pi))
      throw domain_error("mv_weight: theta outside (0, pi)");

  complex_t w = 1.0;

  // head factor at theta_1
  {
    const complex_t e1p = unit_phase(thetas[0]);
    const complex_t e1m = std::conj(e1p);
    switch (spec.kind) {
      case family_kind::mv_askey_wilson:
      case family_kind::mv_askey_wilson_tilde:
        w /= qpochhammer_inf(ch.a() * e1p, q) * qpochhammer_inf(ch.a() * e1m, q) *
             qpochhammer_inf(ch.b() * e1p, q) * qpochhammer_inf(ch.b() * e1m, q);
        break;
      case family_kind::mv_dual_q_hahn:
        w /= qpochhammer_inf(ch.a() * e1p, q) * qpochhammer_inf(ch.a() * e1m, q);
        break;
      case family_kind::mv_al_salam_chihara:
        break;
    }
  }

  // coupling factors, k = 1 .. s-1
  for (int k = 1; k < s; ++k) {
    const double tk = thetas[k - 1];
    const double tk1 = thetas[k];
    const double ak1 = ch.chain_value(k + 1);
    const complex_t num = qpochhammer_inf(unit_phase(2.0 * tk), q) *
                          qpochhammer_inf(unit_phase(-2.0 * tk), q);
    const complex_t den = qpochhammer_inf(ak1 * unit_phase(tk1 + tk), q) *
                          qpochhammer_inf(ak1 * unit_phase(tk1 - tk), q) *
                          qpochhammer_inf(ak1 * unit_phase(tk - tk1), q) *
                          qpochhammer_inf(ak1 * unit_phase(-tk1 - tk), q);
    w *= num / den;
  }

  // terminal factor at theta_s
  {
    const double ts = thetas[s - 1];
    const complex_t esp = unit_phase(ts);
    const complex_t esm = std::conj(esp);
    const bool aw_like = spec.kind == family_kind::mv_askey_wilson ||
                         spec.kind == family_kind::mv_askey_wilson_tilde;
    const complex_t u = aw_like ? complex_t(ch.c()) : complex_t(ch.b());
    const complex_t v = aw_like ? complex_t(ch.d()) : complex_t(ch.c());
    const complex_t num = qpochhammer_inf(unit_phase(2.0 * ts), q) *
                          qpochhammer_inf(unit_phase(-2.0 * ts), q);
    const complex_t den =
        qpochhammer_inf(u * esp, q) * qpochhammer_inf(u * esm, q) *
        qpochhammer_inf(v * esp, q) * qpochhammer_inf(v * esm, q);
    w *= num / den;
  }

  if (!(std::abs(w.imag()) <= tol * std::abs(w)))
    throw domain_error("mv_weight: imaginary residue exceeds tolerance");
  if (!(w.real() > 0.0) || !std::isfinite(w.real()))
    throw domain_error("mv_weight: non-positive weight sample");
  return w.real();
}

double mv_weight(const family_spec& spec, const multi_point& pt, double tol) {
  double w = mv_weight_theta(spec, pt.thetas(), tol);
  // restore the (1 - x_k^2)^{-1/2} singular factors
  for (double t : pt.thetas()) w /= std::sin(t);
  return w;
}

double mv_norm(const family_spec& spec, const multi_index& n) {
  const parameter_chain& ch = spec.chain;
  const q_base q = ch.q();
  const double qv = q.value();
  const int s = ch.s();
  if (n.size() != s)
    throw invalid_params("mv_norm: degree vector length must equal s");

  double lambda = std::pow(2.0 * std::numbers::pi, s);

  switch (spec.kind) {
    case family_kind::mv_askey_wilson: {
      for (int k = 1; k <= s; ++k) {
        const int nk = n.at(k);
        const int nsum = n.sum(1, k) + n.sum(1, k - 1);
        const double a_next_sq = a1_squared_product(ch, k + 1);
        const double a_this_sq = a1_squared_product(ch, k);
        const double ak1_sq = boundary_square(ch, k + 1, ch.left_boundary_sq(),
                                              ch.right_boundary_sq());
        const double num = qpochhammer(qv, q, nk) *
                           qpochhammer(a_next_sq * std::pow(qv, nsum - 1), q, nk) *
                           qpochhammer_inf(a_next_sq * std::pow(qv, 2 * n.sum(1, k)), q);
        const double den =
            qpochhammer_inf(qv, q) *
            qpochhammer_inf(a_this_sq * std::pow(qv, nsum), q) *
            qpochhammer_inf(ak1_sq * std::pow(qv, nk), q);
        lambda *= num / den;
      }
      const double tail = ch.chain_product(2, s) * std::pow(qv, n.total());
      for (double pq : {ch.a() * ch.c(), ch.a() * ch.d(), ch.b() * ch.c(),
                        ch.b() * ch.d()})
        lambda /= qpochhammer_inf(pq * tail, q);
      break;
    }
    case family_kind::mv_askey_wilson_tilde: {
      for (int k = 1; k <= s; ++k) {
        const int nk = n.at(k);
        const int nsum = n.sum(k, s) + n.sum(k + 1, s);
        const double a_this_sq = tail_squared_product(ch, k);
        const double a_next_sq = tail_squared_product(ch, k + 1);
        const double ak_sq = boundary_square(ch, k, ch.left_boundary_sq(),
                                             ch.right_boundary_sq());
        const double num = qpochhammer(qv, q, nk) *
                           qpochhammer(a_this_sq * std::pow(qv, nsum - 1), q, nk) *
                           qpochhammer_inf(a_this_sq * std::pow(qv, 2 * n.sum(k, s)), q);
        const double den =
            qpochhammer_inf(qv, q) *
            qpochhammer_inf(a_next_sq * std::pow(qv, nsum), q) *
            qpochhammer_inf(ak_sq * std::pow(qv, nk), q);
        lambda *= num / den;
      }
      const double tail = ch.chain_product(2, s) * std::pow(qv, n.total());
      for (double pq : {ch.a() * ch.c(), ch.a() * ch.d(), ch.b() * ch.c(),
                        ch.b() * ch.d()})
        lambda /= qpochhammer_inf(pq * tail, q);
      break;
    }
    case family_kind::mv_dual_q_hahn:
    case family_kind::mv_al_salam_chihara: {
      const double right_sq = ch.b() * ch.c();  // a_{s+1}^2 = b*c
      for (int k = 1; k <= s; ++k) {
        const int nk = n.at(k);
        const double ak1_sq = boundary_square(ch, k + 1, 0.0, right_sq);
        lambda /= qpochhammer_inf(std::pow(qv, nk + 1), q) *
                  qpochhammer_inf(ak1_sq * std::pow(qv, nk), q);
      }
      if (spec.kind == family_kind::mv_dual_q_hahn) {
        const double tail = ch.chain_product(2, s) * std::pow(qv, n.total());
        lambda /= qpochhammer_inf(ch.a() * ch.b() * tail, q) *
                  qpochhammer_inf(ch.a() * ch.c() * tail, q);
      }
      break;
    }
  }

  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw domain_error("mv_norm: norm not strictly positive");
  return lambda;
}

permuted_triple system_involution(const family_spec& spec, const multi_index& n,
                           const multi_point& pt) {
  if (spec.kind != family_kind::mv_askey_wilson)
    throw invalid_params("system_involution: defined for the mv-aw kind only");
  const parameter_chain& ch = spec.chain;
  if (n.size() != ch.s() || pt.size() != ch.s())
    throw invalid_params("system_involution: length mismatch");

  std::vector<double> rev_chain(ch.chain().rbegin(), ch.chain().rend());
  parameter_chain permuted(ch.q(), ch.c(), ch.d(), ch.a(), ch.b(),
                           std::move(rev_chain));

  std::vector<int> rev_n(n.values().rbegin(), n.values().rend());
  std::vector<double> rev_t(pt.thetas().rbegin(), pt.thetas().rend());

  return permuted_triple{make_mv_askey_wilson(std::move(permuted)),
                         multi_index(std::move(rev_n)),
                         multi_point(std::move(rev_t))};
}

tilde_eval tilde_from_permutation(const multi_index& n, const multi_point& pt,
                                  const parameter_chain& chain) {
  const double direct =
      mv_poly(make_mv_askey_wilson_tilde(chain), n, pt);
  const permuted_triple p = system_involution(make_mv_askey_wilson(chain), n, pt);
  const double via = mv_poly(p.spec, p.n, p.pt);
  return tilde_eval{direct, via};
}

}  // namespace qaskey
