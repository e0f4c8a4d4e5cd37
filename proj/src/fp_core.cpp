#include "extremal/fp_core.hpp"

#include <algorithm>
#include <string>

#include "extremal/error.hpp"

namespace extremal {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeContext::PrimeContext(int p) : p_(p) {
  if (p < 3 || !is_prime(p))
    throw Error(ErrorKind::InvalidInput,
                "p must be an odd prime, got " + std::to_string(p));
}

Residue PrimeContext::pow(Residue a, std::int64_t e) const noexcept {
  std::int64_t base = reduce(a), acc = 1;
  while (e > 0) {
    if (e & 1) acc = acc * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<Residue>(acc);
}

Residue PrimeContext::inverse(Residue a) const {
  require_unit(a);
  return pow(a, p_ - 2);
}

void PrimeContext::require_unit(Residue k) const {
  if (k < 1 || k > p_ - 1)
    throw Error(ErrorKind::InvalidInput,
                "residue " + std::to_string(k) + " is not in 1.." +
                    std::to_string(p_ - 1));
}

int element_order(const PrimeContext& ctx, Residue k) {
  ctx.require_unit(k);
  int d = 1;
  for (Residue x = k; x != 1; x = ctx.mul(x, k)) ++d;
  return d;
}

ResidueSet subgroup_generated(const PrimeContext& ctx, Residue k) {
  ctx.require_unit(k);
  ResidueSet out{1};
  for (Residue x = k; x != 1; x = ctx.mul(x, k)) out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> prime_divisors(int n) {
  std::vector<int> out;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace extremal
