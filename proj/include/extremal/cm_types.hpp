#pragma once

// CM types: subsets of F_p^* containing exactly one residue of each pair
// {k, p-k}. They are the eigenvalue exponent sets of the analytic
// representation of an order-p automorphism.

#include <compare>
#include <cstdint>
#include <vector>

#include "extremal/fp_core.hpp"

namespace extremal {

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 24;

/// True iff |set| = g and set holds exactly one of each pair {k, p-k}.
/// Accepts unsorted input; out-of-range or repeated residues give false.
bool is_cm_type(const PrimeContext& ctx, const ResidueSet& set);

class CmType {
 public:
  /// Validates and sorts; throws Error(InvalidInput) on a non-CM set.
  CmType(const PrimeContext& ctx, ResidueSet members);

  /// Builds the CM type whose i-th pair {i+1, p-i-1} contributes the large
  /// residue when bit i of `choice` is set. Requires g <= 63.
  static CmType from_choice(const PrimeContext& ctx, std::uint64_t choice);

  const PrimeContext& ctx() const noexcept { return ctx_; }
  const ResidueSet& members() const noexcept { return members_; }
  int size() const noexcept { return static_cast<int>(members_.size()); }

  bool contains(Residue k) const;
  /// Inverse of from_choice.
  std::uint64_t choice() const;
  /// Sum of the members reduced mod p.
  Residue sum_mod_p() const;

  friend bool operator==(const CmType& a, const CmType& b) {
    return a.ctx_ == b.ctx_ && a.members_ == b.members_;
  }
  /// Lexicographic on the sorted member lists (same p assumed).
  friend std::strong_ordering operator<=>(const CmType& a, const CmType& b) {
    return a.members_ <=> b.members_;
  }

 private:
  struct Trusted {};
  CmType(const PrimeContext& ctx, ResidueSet members, Trusted)
      : ctx_(ctx), members_(std::move(members)) {}
  friend CmType act(const PrimeContext&, Residue, const CmType&);

  PrimeContext ctx_;
  ResidueSet members_;
};

/// Maps enumeration index n (0 <= n < 2^g) to the choice bits of the n-th
/// CM type in lexicographic order of sorted member lists.
std::uint64_t lex_rank_to_choice(int g, std::uint64_t n);

/// All 2^g CM types in lexicographic order. Throws
/// Error(EnumerationTooLarge) when 2^g exceeds `cap`.
std::vector<CmType> enumerate_cm_types(
    const PrimeContext& ctx, std::uint64_t cap = kDefaultEnumerationCap);

/// Throws Error(EnumerationTooLarge) if 2^g > cap.
void require_enumerable(const PrimeContext& ctx, std::uint64_t cap);

}  // namespace extremal
