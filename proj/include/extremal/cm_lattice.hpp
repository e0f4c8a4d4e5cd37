#pragma once

// Concrete CM tori C^g / Phi_C(Z[xi]): a principal Riemann form on the
// cyclotomic lattice, a symplectic basis, the period matrix, and checks that
// multiplication by xi is a symplectic automorphism fixing the period point.

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "extremal/cm_types.hpp"
#include "extremal/int_matrix.hpp"

namespace extremal {

inline constexpr double kAlgebraicTolerance = 1e-9;
inline constexpr double kCompositionTolerance = 1e-8;

/// Images of the power basis 1, xi, ..., xi^{p-2} under Phi_C. Column k is
/// (exp(2 pi i j k / p))_{j in C}.
struct CmEmbedding {
  PrimeContext ctx;
  CmType cm_type;
  Eigen::MatrixXcd basis_images;  // g x (p-1)
};

CmEmbedding embed(const PrimeContext& ctx, const CmType& set);

/// The Riemann form E(x, y) = Tr(alpha x conj(y)) with
/// alpha = (1/p) sum_k c_k xi^k, where c is odd (c_{p-k} = -c_k) and given
/// by (c_1, ..., c_g).
struct PolarizationForm {
  std::vector<int> c;
  ZMatrix form;                     // (p-1) x (p-1), E[a][b] = c_{(b-a) mod p}
  BigInt pfaffian;
  std::vector<double> alpha_imag;   // Im phi_j(alpha) for j in C, in member order

  bool principal() const { return abs(pfaffian) == 1; }
  bool positive() const;
};

/// c_k for any integer k, extended oddly from (c_1, ..., c_g).
int odd_coefficient(const PrimeContext& ctx, const std::vector<int>& c, long long k);

/// E(xi^a, xi^b) on the power basis, 0 <= a, b <= p-2.
int riemann_form_value(const PrimeContext& ctx, const std::vector<int>& c, int a, int b);

/// Builds the form for a given coefficient vector without judging it.
PolarizationForm make_polarization(const PrimeContext& ctx, const CmType& set,
                                   const std::vector<int>& c);

/// First c in [-bound, bound]^g (lexicographic, c_1 most significant) with
/// Pfaffian +-1 and Im phi_j(alpha) > 0 for all j in C. Throws
/// Error(PolarizationExhausted) when the box holds none.
PolarizationForm find_polarization(const PrimeContext& ctx, const CmType& set, int bound);

/// Multiplication by xi on the power basis: the companion matrix of the
/// p-th cyclotomic polynomial, acting on column vectors.
ZMatrix cyclotomic_companion(const PrimeContext& ctx);

struct PeriodData {
  PrimeContext ctx;
  CmType cm_type;
  ZMatrix form;        // E
  ZMatrix basis;       // U, with U^T E U = J_std
  ZMatrix xi_action;   // M
  ZMatrix symplectic_action;  // R = U^{-1} M U
  Eigen::MatrixXcd tau;
  bool block_swapped = false;
  double symmetry_residual = 0;
  double min_im_eigenvalue = 0;
};

/// With W = Phi_C(power basis) * U = (P1 | P2), tau = P2^{-1} P1, or
/// P1^{-1} P2 (block_swapped) when only that choice has Im tau > 0. Throws
/// Error(InternalConsistency, "Riemann relations violated") otherwise.
PeriodData period_matrix(const CmEmbedding& embedding, const PolarizationForm& polarization);

struct AutomorphismReport {
  bool preserves_form = false;  // M^T E M = E
  bool order_p = false;         // R^p = I
  bool symplectic = false;      // R^T J R = J
  bool fixes_tau = false;
  bool spectrum = false;        // analytic eigenvalues are exp(2 pi i k/p), k in C
  double fix_residual = 0;
  double spectrum_residual = 0;

  bool all() const { return preserves_form && order_p && symplectic && fixes_tau && spectrum; }
};

/// The integral matrix whose blocks [[A, B], [C, D]] act on tau by
/// (A tau + B)(C tau + D)^{-1}; it is R^T, conjugated by the block swap when
/// the period point uses the swapped convention.
ZMatrix modular_action(const PeriodData& data);

AutomorphismReport automorphism_check(const PeriodData& data);

/// Maps tau in the upper half plane into the standard fundamental domain
/// of SL(2, Z).
std::complex<double> reduce_to_fundamental_domain(std::complex<double> tau);

}  // namespace extremal
