#pragma once

// Characters of Z/p acting on holomorphic differentials of the cyclic cover
// y^p = prod (x - e_i)^{a_i} of the projective line.

#include <optional>
#include <vector>

#include "extremal/strata.hpp"

namespace extremal {

class CyclicCoverSpec {
 public:
  /// `finite` are the exponents at finite branch points, each in 1..p-1.
  /// The exponent at infinity, -sum mod p, is appended when nonzero.
  /// Requires at least three branch points in total.
  CyclicCoverSpec(const PrimeContext& ctx, std::vector<int> finite);

  const PrimeContext& ctx() const noexcept { return ctx_; }
  const std::vector<int>& finite() const noexcept { return finite_; }
  std::optional<int> at_infinity() const noexcept { return infinity_; }
  /// Finite exponents followed by the one at infinity, if any.
  std::vector<int> exponents() const;
  int branch_points() const noexcept { return static_cast<int>(finite_.size()) + (infinity_ ? 1 : 0); }

 private:
  PrimeContext ctx_;
  std::vector<int> finite_;
  std::optional<int> infinity_;
};

/// Riemann-Hurwitz for a totally ramified cyclic p-cover: (p-1)(m-2)/2.
int cover_genus(const CyclicCoverSpec& spec);

/// Multiplicity of the character t (index t, 1..p-1; index 0 unused) on
/// H^0(omega), closed form -1 + sum_i frac(t a_i / p).
std::vector<int> closed_form_spectrum(const CyclicCoverSpec& spec);

/// The same multiplicities counted from explicit differentials
/// prod (x - e_i)^{r_i} y^{-t} dx with 0 <= r_i < p, kept when their
/// valuation is non-negative at every point over a branch point and at
/// infinity. The count per t is the dimension of their span, which is the
/// number of distinct total degrees sum r_i among the kept monomials.
std::vector<int> monomial_spectrum(const CyclicCoverSpec& spec);

/// Closed form for three branch points, the monomial count otherwise.
std::vector<int> cw_spectrum(const CyclicCoverSpec& spec);

/// Characters t with nonzero multiplicity.
ResidueSet spectrum_support(const std::vector<int>& multiplicities);

struct SpectrumClass {
  CmType support;
  CmType canonical;
  bool isolated = false;
  int stabilizer_order = 1;
};

/// Orbit class of a CM-type support. Throws Error(InvalidInput) otherwise.
SpectrumClass spectrum_class(const PrimeContext& ctx, const ResidueSet& support);

}  // namespace extremal
