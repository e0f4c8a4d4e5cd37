#pragma once

// Arithmetic in the multiplicative group F_p^* of a prime field.

#include <cstdint>
#include <vector>

namespace extremal {

using Residue = int;
using ResidueSet = std::vector<Residue>;  // sorted ascending, members in 1..p-1

bool is_prime(std::int64_t n);

/// The prime p together with g = (p-1)/2. Only odd primes are accepted.
class PrimeContext {
 public:
  /// Throws Error(InvalidInput) unless p is an odd prime.
  explicit PrimeContext(int p);

  int p() const noexcept { return p_; }
  int g() const noexcept { return (p_ - 1) / 2; }
  int group_order() const noexcept { return p_ - 1; }

  Residue mul(Residue a, Residue b) const noexcept {
    return static_cast<Residue>((static_cast<std::int64_t>(a) * b) % p_);
  }
  Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Residue pow(Residue a, std::int64_t e) const noexcept;
  Residue inverse(Residue a) const;

  /// Reduces an arbitrary integer into 0..p-1.
  Residue reduce(std::int64_t a) const noexcept {
    auto r = a % p_;
    return static_cast<Residue>(r < 0 ? r + p_ : r);
  }

  /// Throws Error(InvalidInput) when k is not in 1..p-1.
  void require_unit(Residue k) const;

  friend bool operator==(const PrimeContext&, const PrimeContext&) = default;

 private:
  int p_;
};

/// Least d >= 1 with k^d = 1 (mod p).
int element_order(const PrimeContext& ctx, Residue k);

/// {k^j mod p : j >= 0}, sorted ascending.
ResidueSet subgroup_generated(const PrimeContext& ctx, Residue k);

/// Prime divisors of n in increasing order.
std::vector<int> prime_divisors(int n);

}  // namespace extremal
