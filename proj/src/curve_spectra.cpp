#include "extremal/curve_spectra.hpp"

#include <numeric>
#include <set>
#include <string>

#include "extremal/error.hpp"

namespace extremal {

CyclicCoverSpec::CyclicCoverSpec(const PrimeContext& ctx, std::vector<int> finite)
    : ctx_(ctx), finite_(std::move(finite)) {
  long long sum = 0;
  for (int a : finite_) {
    if (a < 1 || a > ctx_.p() - 1)
      throw Error(ErrorKind::InvalidInput,
                  "branch exponent " + std::to_string(a) + " is not in 1.." + std::to_string(ctx_.p() - 1));
    sum += a;
  }
  const Residue rest = ctx_.reduce(-sum);
  if (rest != 0) infinity_ = rest;
  if (branch_points() < 3)
    throw Error(ErrorKind::InvalidInput, "a cyclic cover needs at least three branch points");
}

std::vector<int> CyclicCoverSpec::exponents() const {
  std::vector<int> out = finite_;
  if (infinity_) out.push_back(*infinity_);
  return out;
}

int cover_genus(const CyclicCoverSpec& spec) {
  return (spec.ctx().p() - 1) * (spec.branch_points() - 2) / 2;
}

std::vector<int> closed_form_spectrum(const CyclicCoverSpec& spec) {
  const int p = spec.ctx().p();
  std::vector<int> mult(p, 0);
  const std::vector<int> exps = spec.exponents();
  for (int t = 1; t < p; ++t) {
    // sum of fractional parts, scaled by p; an integer because sum a_i = 0 mod p
    long long scaled = 0;
    for (int a : exps) scaled += (static_cast<long long>(t) * a) % p;
    mult[t] = static_cast<int>(scaled / p) - 1;
  }
  return mult;
}

std::vector<int> monomial_spectrum(const CyclicCoverSpec& spec) {
  const int p = spec.ctx().p();
  const std::vector<int>& finite = spec.finite();
  const std::size_t m = finite.size();
  long long finite_sum = std::accumulate(finite.begin(), finite.end(), 0LL);
  const bool ramified_at_infinity = spec.at_infinity().has_value();

  std::vector<int> mult(p, 0);
  for (int t = 1; t < p; ++t) {
    std::set<long long> degrees;
    std::vector<int> r(m, 0);
    for (;;) {
      // Over e_i (totally ramified): v(x - e_i) = p, v(y) = a_i, v(dx) = p - 1.
      bool ok = true;
      long long degree = 0;
      for (std::size_t i = 0; i < m && ok; ++i) {
        ok = static_cast<long long>(p) * r[i] - static_cast<long long>(t) * finite[i] + p - 1 >= 0;
        degree += r[i];
      }
      if (ok) {
        if (ramified_at_infinity) {
          // one point: v(x) = -p, v(y) = -sum a_i, v(dx) = -p - 1
          ok = -static_cast<long long>(p) * degree + t * finite_sum - p - 1 >= 0;
        } else {
          // p unramified points: v(x) = -1, v(y) = -sum a_i / p, v(dx) = -2
          ok = -degree + t * (finite_sum / p) - 2 >= 0;
        }
      }
      if (ok) degrees.insert(degree);

      std::size_t i = 0;
      while (i < m && r[i] == p - 1) r[i++] = 0;
      if (i == m) break;
      ++r[i];
    }
    mult[t] = static_cast<int>(degrees.size());
  }
  return mult;
}

std::vector<int> cw_spectrum(const CyclicCoverSpec& spec) {
  return spec.branch_points() == 3 ? closed_form_spectrum(spec) : monomial_spectrum(spec);
}

ResidueSet spectrum_support(const std::vector<int>& multiplicities) {
  ResidueSet out;
  for (std::size_t t = 1; t < multiplicities.size(); ++t)
    if (multiplicities[t] > 0) out.push_back(static_cast<Residue>(t));
  return out;
}

SpectrumClass spectrum_class(const PrimeContext& ctx, const ResidueSet& support) {
  CmType s(ctx, support);
  const Stabilizer h = stabilizer(ctx, s);
  return {s, canonical_form(ctx, s), h.trivial(), h.order};
}

}  // namespace extremal
