#include <doctest.h>

#include "extremal/error.hpp"
#include "extremal/strata.hpp"
#include "oracles.hpp"

using namespace extremal;

namespace {

CmType cm(int p, ResidueSet s) { return CmType(PrimeContext(p), std::move(s)); }

}  // namespace

TEST_CASE("stratum dimension") {
  CHECK(stratum_dimension({5, 5, {1, 1, 1, 1, 1}}) == 3);
  CHECK(stratum_dimension({3, 3, {1, 1, 1}}) == 2);
  CHECK(stratum_dimension({5, 4, {0, 2, 0, 2, 0}}) == 0);
  CHECK(stratum_dimension({3, 5, {3, 1, 1}}) == 7);
  const PrimeContext ctx(11);
  CHECK(stratum_dimension(extremal_profile(ctx, cm(11, {1, 2, 3, 4, 5}))) == 0);
}

TEST_CASE("stratum dimension matches invariants of Sym^2") {
  for (int q : {3, 5, 7}) {
    // all profiles with n_i + n_{q-i} = r, r <= 2, n_0 <= 2
    for (int n0 = 0; n0 <= 2; ++n0)
      for (int r = 0; r <= 2; ++r) {
        const int half = (q - 1) / 2;
        int combos = 1;
        for (int i = 0; i < half; ++i) combos *= r + 1;
        for (int code = 0; code < combos; ++code) {
          std::vector<int> n(q, 0);
          n[0] = n0;
          int rest = code;
          for (int i = 1; i <= half; ++i) {
            n[i] = rest % (r + 1);
            n[q - i] = r - n[i];
            rest /= r + 1;
          }
          const int g = n0 + half * r;
          if (g == 0) continue;
          CHECK(stratum_dimension({q, g, n}) == oracle::sym2_invariants(q, n));
        }
      }
  }
}

TEST_CASE("inconsistent spectra are rejected") {
  auto rejects = [](const SpectrumProfile& profile) {
    try {
      stratum_dimension(profile);
    } catch (const Error& e) {
      return e.kind() == ErrorKind::InvalidInput &&
             std::string(e.what()).find("inconsistent spectrum") != std::string::npos;
    }
    return false;
  };
  CHECK(rejects({5, 5, {1, 2, 0, 1, 1}}));   // n_1 + n_4 != n_2 + n_3
  CHECK(rejects({5, 6, {1, 1, 1, 1, 1}}));   // sum != g
  CHECK(rejects({5, 5, {1, 1, 1, 1}}));      // wrong length
  CHECK(rejects({4, 4, {1, 1, 1, 1}}));      // q not prime
  CHECK(rejects({3, 1, {2, -1, 0}}));        // negative
}

TEST_CASE("isolation and simplicity") {
  const PrimeContext ctx(11);
  CHECK(is_isolated(ctx, cm(11, {1, 2, 3, 4, 5})));
  CHECK(is_isolated(ctx, cm(11, {1, 2, 3, 4, 6})));
  CHECK(is_isolated(ctx, cm(11, {1, 2, 3, 5, 7})));
  CHECK_FALSE(is_isolated(ctx, cm(11, {1, 3, 4, 5, 9})));
  CHECK(is_isolated(PrimeContext(5), cm(5, {1, 2})));
  CHECK(is_simple(ctx, cm(11, {1, 2, 3, 4, 5})));
  CHECK_FALSE(is_simple(ctx, cm(11, {1, 3, 4, 5, 9})));
  CHECK_FALSE(is_simple(PrimeContext(7), cm(7, {1, 2, 4})));
}

TEST_CASE("sum criterion") {
  const PrimeContext ctx(11);
  CHECK(sum_criterion(ctx, cm(11, {1, 2, 3, 4, 5})) == SumVerdict::GuaranteedTrivial);
  CHECK(cm(11, {1, 2, 3, 4, 5}).sum_mod_p() == 4);
  CHECK(sum_criterion(ctx, cm(11, {1, 3, 4, 5, 9})) == SumVerdict::Inconclusive);
  CHECK(cm(11, {1, 3, 4, 5, 9}).sum_mod_p() == 0);
}

TEST_CASE("theta profiles") {
  const SpectrumProfile a = theta_profile(PrimeContext(11), cm(11, {1, 3, 4, 5, 9}), 3);
  CHECK(a.q == 5);
  CHECK(a.multiplicities == std::vector<int>{1, 1, 1, 1, 1});
  const SpectrumProfile b = theta_profile(PrimeContext(7), cm(7, {1, 2, 4}), 2);
  CHECK(b.q == 3);
  CHECK(b.multiplicities == std::vector<int>{1, 1, 1});
  const SpectrumProfile c = theta_profile(PrimeContext(13), cm(13, {1, 2, 3, 5, 6, 9}), 3);
  CHECK(c.q == 3);
  CHECK(c.multiplicities == std::vector<int>{2, 2, 2});

  const CmType qr = cm(19, {1, 4, 5, 6, 7, 9, 11, 16, 17});
  CHECK_THROWS_AS(theta_profile(PrimeContext(19), qr, 4), Error);  // order 9
  CHECK(theta_profile(PrimeContext(19), qr, 7).q == 3);
  CHECK_THROWS_AS(theta_profile(PrimeContext(11), cm(11, {1, 3, 4, 5, 9}), 2), Error);
  CHECK_THROWS_AS(theta_profile(PrimeContext(11), cm(11, {1, 3, 4, 5, 9}), 1), Error);
}

TEST_CASE("containing strata") {
  CHECK(containing_strata(PrimeContext(11), cm(11, {1, 2, 3, 4, 5})).empty());

  const auto s4 = containing_strata(PrimeContext(11), cm(11, {1, 3, 4, 5, 9}));
  REQUIRE(s4.size() == 1);
  CHECK(s4[0].q == 5);
  CHECK(s4[0].theta == 3);
  CHECK(s4[0].dimension == 3);

  const auto s7 = containing_strata(PrimeContext(7), cm(7, {1, 2, 4}));
  REQUIRE(s7.size() == 1);
  CHECK(s7[0].q == 3);
  CHECK(s7[0].theta == 2);
  CHECK(s7[0].dimension == 2);

  // stabilizer of order 9 yields only the prime q = 3
  const auto qr = containing_strata(PrimeContext(19), cm(19, {1, 4, 5, 6, 7, 9, 11, 16, 17}));
  REQUIRE(qr.size() == 1);
  CHECK(qr[0].q == 3);
  CHECK(qr[0].theta == 7);
  CHECK(qr[0].profile.multiplicities == std::vector<int>{3, 3, 3});
}

TEST_CASE("classifier invariants, exhaustive for p <= 19") {
  for (int p : oracle::kSmallPrimes) {
    const PrimeContext ctx(p);
    for (const auto& s : enumerate_cm_types(ctx)) {
      const Stabilizer h = stabilizer(ctx, s);
      const auto strata = containing_strata(ctx, s);
      CHECK(is_isolated(ctx, s) == h.trivial());
      CHECK(is_isolated(ctx, s) == strata.empty());
      CHECK(stratum_dimension(extremal_profile(ctx, s)) == 0);
      for (const auto& st : strata) CHECK(st.dimension >= 1);
      for (Residue theta : h.elements) {
        if (theta == 1 || !is_prime(element_order(ctx, theta))) continue;
        const SpectrumProfile prof = theta_profile(ctx, s, theta);
        const int q = prof.q, r = 2 * ctx.g() / q;
        for (int i = 1; i < q; ++i) CHECK(prof.multiplicities[i] + prof.multiplicities[q - i] == r);
        CHECK(prof.multiplicities[0] + (q - 1) / 2 * r == ctx.g());
      }
    }
  }
}

TEST_CASE("sum criterion is sound for every CM type, p <= 31") {
  for (int p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
    const PrimeContext ctx(p);
    for (const auto& s : enumerate_cm_types(ctx))
      if (sum_criterion(ctx, s) == SumVerdict::GuaranteedTrivial) CHECK(is_isolated(ctx, s));
  }
}

TEST_CASE("{1, ..., g} is isolated for every prime p <= 199") {
  for (int p = 3; p <= 199; p += 2) {
    if (!is_prime(p)) continue;
    const PrimeContext ctx(p);
    ResidueSet first;
    for (int k = 1; k <= ctx.g(); ++k) first.push_back(k);
    const CmType s(ctx, first);
    CHECK(sum_criterion(ctx, s) == SumVerdict::GuaranteedTrivial);
    CHECK(is_isolated(ctx, s));
  }
}
