#pragma once

#include <span>
#include <vector>

#include "qaskey/askey_wilson.hpp"
#include "qaskey/qcore.hpp"

namespace qaskey {

/// A point of (0, pi)^s in angle coordinates; x_k = cos(theta_k) derived.
class multi_point {
 public:
  explicit multi_point(std::vector<double> thetas);

  int size() const noexcept { return static_cast<int>(thetas_.size()); }
  /// theta_k, 1-based.
  double theta(int k) const;
  double x(int k) const { return std::cos(theta(k)); }
  const std::vector<double>& thetas() const noexcept { return thetas_; }

 private:
  std::vector<double> thetas_;
};

enum class family_kind {
  mv_askey_wilson,
  mv_askey_wilson_tilde,
  mv_dual_q_hahn,
  mv_al_salam_chihara,
};

const char* family_kind_name(family_kind kind);

/// A multivariable family: the polynomial system plus its parameter chain.
/// mv_dual_q_hahn uses (a, b, c, a_2..a_s) with d fixed at 0;
/// mv_al_salam_chihara uses (b, c, a_2..a_s) with a and d fixed at 0.
struct family_spec {
  family_kind kind;
  parameter_chain chain;
};

family_spec make_mv_askey_wilson(parameter_chain chain);
family_spec make_mv_askey_wilson_tilde(parameter_chain chain);
family_spec make_mv_dual_q_hahn(q_base q, double a, double b, double c,
                                std::vector<double> chain);
family_spec make_mv_al_salam_chihara(q_base q, double b, double c,
                                     std::vector<double> chain);

/// P_n(x | q): the product of single-variable polynomials with chained
/// parameters.  For mv_askey_wilson, factor k < s is
///   p_{n_k}(x_k; a A_{2,k} q^{N_{k-1}}, b A_{2,k} q^{N_{k-1}},
///                a_{k+1} e^{i theta_{k+1}}, a_{k+1} e^{-i theta_{k+1}} | q)
/// and factor s is
///   p_{n_s}(x_s; a A_{2,s} q^{N_{s-1}}, b A_{2,s} q^{N_{s-1}}, c, d | q).
/// The tilde, dual q-Hahn and Al-Salam-Chihara kinds use their own factor
/// parameterizations.  The result is real up to roundoff for admissible real
/// chains (imaginary residue below 1e-9 relative away from the polynomial's
/// zero set; verified by the property tests).
double mv_poly(const family_spec& spec, const multi_index& n,
               const multi_point& pt);
double mv_poly_theta(const family_spec& spec, const multi_index& n,
                     std::span<const double> thetas);

/// rho(x | q): the family's weight on (-1, 1)^s, including the
/// (1 - x_k^2)^{-1/2} factors.  Strictly positive; the imaginary residue of
/// the complex product evaluation must stay below tol relative.
double mv_weight(const family_spec& spec, const multi_point& pt,
                 double tol = 1e-9);

/// rho(x | q) * prod_k sin(theta_k): the integration density in angle
/// coordinates, where the substitution x_k = cos(theta_k) absorbs each
/// (1 - x_k^2)^{-1/2} exactly.  This is what the quadrature samples.
double mv_weight_theta(const family_spec& spec, std::span<const double> thetas,
                       double tol = 1e-9);

/// lambda_n(q): the closed-form norm of the family, with the boundary squares
/// a_1^2, a_{s+1}^2 substituted as parameter products (a*b, c*d or b*c).
double mv_norm(const family_spec& spec, const multi_index& n);

struct permuted_triple {
  family_spec spec;
  multi_index n;
  multi_point pt;
};

/// The involution a<->c, b<->d, a_{k+1} <-> a_{s-k+1}, theta_k <-> theta_{s-k+1},
/// n_k <-> n_{s-k+1}.  Only defined for the mv_askey_wilson kind.
permuted_triple system_involution(const family_spec& spec, const multi_index& n,
                           const multi_point& pt);

struct tilde_eval {
  double direct;           // the tilde product formula evaluated as printed
  double via_permutation;  // mv_poly of the permuted first system
};

/// Dual-path evaluation of the second (tilde) system: once from its own
/// factor formula and once by permuting the first system.  The two paths
/// agreeing is the correctness check for the permutation bookkeeping.
tilde_eval tilde_from_permutation(const multi_index& n, const multi_point& pt,
                                  const parameter_chain& chain);

}  // namespace qaskey
