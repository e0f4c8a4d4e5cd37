#include "extremal/cm_types.hpp"

#include <algorithm>
#include <string>

#include "extremal/error.hpp"

namespace extremal {

bool is_cm_type(const PrimeContext& ctx, const ResidueSet& set) {
  const int p = ctx.p();
  if (static_cast<int>(set.size()) != ctx.g()) return false;
  std::vector<bool> seen(p, false);
  for (Residue k : set) {
    if (k < 1 || k > p - 1) return false;
    if (seen[k] || seen[p - k]) return false;
    seen[k] = true;
  }
  return true;
}

CmType::CmType(const PrimeContext& ctx, ResidueSet members)
    : ctx_(ctx), members_(std::move(members)) {
  if (!is_cm_type(ctx_, members_)) {
    std::string shown;
    for (Residue k : members_) shown += (shown.empty() ? "" : ",") + std::to_string(k);
    throw Error(ErrorKind::InvalidInput, "{" + shown + "} is not a CM type for p = " +
                                             std::to_string(ctx_.p()));
  }
  std::sort(members_.begin(), members_.end());
}

CmType CmType::from_choice(const PrimeContext& ctx, std::uint64_t choice) {
  const int g = ctx.g();
  if (g > 63) throw Error(ErrorKind::InvalidInput, "choice encoding needs g <= 63");
  ResidueSet small, large;
  for (int i = 0; i < g; ++i) {
    if ((choice >> i) & 1U)
      large.push_back(ctx.p() - (i + 1));
    else
      small.push_back(i + 1);
  }
  // small residues are all <= g < every large residue
  std::reverse(large.begin(), large.end());
  small.insert(small.end(), large.begin(), large.end());
  return CmType(ctx, std::move(small), Trusted{});
}

bool CmType::contains(Residue k) const {
  return std::binary_search(members_.begin(), members_.end(), k);
}

std::uint64_t CmType::choice() const {
  std::uint64_t bits = 0;
  for (Residue k : members_)
    if (k > ctx_.g()) bits |= std::uint64_t{1} << (ctx_.p() - k - 1);
  return bits;
}

Residue CmType::sum_mod_p() const {
  std::int64_t s = 0;
  for (Residue k : members_) s += k;
  return ctx_.reduce(s);
}

// Two CM types first differ at the smallest residue of the lowest pair on
// which their choices differ; that residue is the small one, so the type
// choosing it sorts first. Lex order is therefore the order of the choice
// bits read with pair 0 as the most significant digit.
std::uint64_t lex_rank_to_choice(int g, std::uint64_t n) {
  std::uint64_t out = 0;
  for (int i = 0; i < g; ++i)
    if ((n >> (g - 1 - i)) & 1U) out |= std::uint64_t{1} << i;
  return out;
}

void require_enumerable(const PrimeContext& ctx, std::uint64_t cap) {
  const int g = ctx.g();
  if (g >= 63 || (std::uint64_t{1} << g) > cap)
    throw Error(ErrorKind::EnumerationTooLarge,
                "enumeration too large: 2^" + std::to_string(g) +
                    " CM types exceeds the cap of " + std::to_string(cap));
}

std::vector<CmType> enumerate_cm_types(const PrimeContext& ctx, std::uint64_t cap) {
  require_enumerable(ctx, cap);
  const int g = ctx.g();
  const std::uint64_t count = std::uint64_t{1} << g;
  std::vector<CmType> out;
  out.reserve(count);
  for (std::uint64_t n = 0; n < count; ++n)
    out.push_back(CmType::from_choice(ctx, lex_rank_to_choice(g, n)));
  return out;
}

}  // namespace extremal
