#include "extremal/strata.hpp"

#include <numeric>
#include <string>

#include "extremal/error.hpp"

namespace extremal {

namespace {

[[noreturn]] void inconsistent(const std::string& why) {
  throw Error(ErrorKind::InvalidInput, "inconsistent spectrum: " + why);
}

}  // namespace

void validate_profile(const SpectrumProfile& profile) {
  const int q = profile.q;
  const auto& n = profile.multiplicities;
  if (q < 3 || !is_prime(q)) inconsistent("q must be an odd prime");
  if (static_cast<int>(n.size()) != q)
    inconsistent("expected " + std::to_string(q) + " multiplicities");
  for (int m : n)
    if (m < 0) inconsistent("negative multiplicity");
  const int r = n[1] + n[q - 1];
  for (int i = 1; i < q; ++i)
    if (n[i] + n[q - i] != r) inconsistent("n_i + n_{q-i} is not constant");
  const int total = std::accumulate(n.begin(), n.end(), 0);
  if (total != profile.g) inconsistent("multiplicities do not sum to g");
  if (n[0] + (q - 1) / 2 * r != profile.g) inconsistent("g != n_0 + (q-1)/2 * r");
}

int stratum_dimension(const SpectrumProfile& profile) {
  validate_profile(profile);
  const auto& n = profile.multiplicities;
  int dim = n[0] * (n[0] + 1) / 2;
  for (int i = 1; i <= (profile.q - 1) / 2; ++i) dim += n[i] * n[profile.q - i];
  return dim;
}

SpectrumProfile extremal_profile(const PrimeContext& ctx, const CmType& set) {
  SpectrumProfile profile{ctx.p(), ctx.g(), std::vector<int>(ctx.p(), 0)};
  for (Residue k : set.members()) profile.multiplicities[k] = 1;
  return profile;
}

bool is_isolated(const PrimeContext& ctx, const CmType& set) {
  return stabilizer(ctx, set).trivial();
}

bool is_simple(const PrimeContext& ctx, const CmType& set) { return is_isolated(ctx, set); }

SumVerdict sum_criterion(const PrimeContext&, const CmType& set) {
  return set.sum_mod_p() != 0 ? SumVerdict::GuaranteedTrivial : SumVerdict::Inconclusive;
}

SpectrumProfile theta_profile(const PrimeContext& ctx, const CmType& set, Residue theta) {
  ctx.require_unit(theta);
  if (theta == 1 || act(ctx, theta, set) != set)
    throw Error(ErrorKind::InvalidInput,
                "theta = " + std::to_string(theta) + " is not a nontrivial stabilizer element");
  const int q = element_order(ctx, theta);
  if (!is_prime(q))
    throw Error(ErrorKind::InvalidInput,
                "theta = " + std::to_string(theta) + " has composite order " + std::to_string(q));

  // Count cycles of k -> theta*k on S by length.
  std::vector<int> cycles_of_length(q + 1, 0);
  std::vector<bool> visited(ctx.p(), false);
  for (Residue start : set.members()) {
    if (visited[start]) continue;
    int len = 0;
    for (Residue k = start; !visited[k]; k = ctx.mul(theta, k)) {
      visited[k] = true;
      ++len;
    }
    if (len > q || q % len != 0)
      throw Error(ErrorKind::InternalConsistency, "cycle length does not divide q");
    ++cycles_of_length[len];
  }
  if (cycles_of_length[1] != 0)
    throw Error(ErrorKind::InternalConsistency, "theta has a fixed point on S");

  // A q-cycle's permutation matrix has every q-th root of unity once.
  const int m = cycles_of_length[q];
  SpectrumProfile profile{q, set.size(), std::vector<int>(q, m)};
  validate_profile(profile);
  return profile;
}

std::vector<StratumReport> containing_strata(const PrimeContext& ctx, const CmType& set) {
  const Stabilizer h = stabilizer(ctx, set);
  std::vector<StratumReport> out;
  for (int q : prime_divisors(h.order)) {
    for (Residue theta : h.elements) {
      if (element_order(ctx, theta) != q) continue;
      StratumReport report;
      report.q = q;
      report.theta = theta;
      report.profile = theta_profile(ctx, set, theta);
      report.dimension = stratum_dimension(report.profile);
      if (report.dimension < 1)
        throw Error(ErrorKind::InternalConsistency, "containing stratum of dimension 0");
      out.push_back(std::move(report));
      break;
    }
  }
  return out;
}

}  // namespace extremal
