#pragma once

// Isolation of extremal p.p.a.v. in the singular locus of A_g, and the
// strata A_g(q, .) that contain the non-isolated ones.

#include <vector>

#include "extremal/orbit_engine.hpp"

namespace extremal {

/// Eigenspace dimensions (n_0, ..., n_{q-1}) of an order-q automorphism
/// acting on a g-dimensional tangent space.
struct SpectrumProfile {
  int q = 0;
  int g = 0;
  std::vector<int> multiplicities;
};

struct StratumReport {
  int q = 0;
  Residue theta = 1;
  SpectrumProfile profile;
  int dimension = 0;  // by the stratum dimension formula; always >= 1
};

enum class SumVerdict { GuaranteedTrivial, Inconclusive };

/// Checks the r-constraint n_i + n_{q-i} = r (i != 0), g = n_0 + (q-1)/2 r,
/// and sum n_i = g. Throws Error(InvalidInput, "inconsistent spectrum ...").
void validate_profile(const SpectrumProfile& profile);

/// n_0(n_0+1)/2 + sum_{i=1}^{(q-1)/2} n_i n_{q-i}.
int stratum_dimension(const SpectrumProfile& profile);

/// The order-p profile of the automorphism whose eigenvalue exponents are S.
SpectrumProfile extremal_profile(const PrimeContext& ctx, const CmType& set);

/// Isolated in Sing A_g iff the isotropy group is trivial.
bool is_isolated(const PrimeContext& ctx, const CmType& set);

/// Simplicity of the variety. Equivalent to isolation for extremal p.p.a.v.,
/// so this is the same stabilizer test.
bool is_simple(const PrimeContext& ctx, const CmType& set);

/// A nontrivial stabilizer element forces sum(S) = 0 mod p, so a nonzero sum
/// certifies a trivial stabilizer. A zero sum proves nothing.
SumVerdict sum_criterion(const PrimeContext& ctx, const CmType& set);

/// Eigenvalue multiplicities of theta permuting S. theta acts without fixed
/// points, so S splits into g/q cycles of length q and each q-th root of
/// unity occurs g/q times. Requires theta in the stabilizer with prime order.
SpectrumProfile theta_profile(const PrimeContext& ctx, const CmType& set, Residue theta);

/// One report per prime q dividing |H_S|, using the smallest stabilizer
/// element of order q. Empty iff S is isolated.
std::vector<StratumReport> containing_strata(const PrimeContext& ctx, const CmType& set);

}  // namespace extremal
