#pragma once

// The multiplicative action of F_p^* on CM types: k.S = {k*s mod p}.

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "extremal/cm_types.hpp"

namespace extremal {

/// The isotropy group H_S = {k : k.S = S}, a cyclic subgroup of F_p^*.
struct Stabilizer {
  ResidueSet elements;  // sorted, always contains 1
  int order = 1;
  Residue generator = 1;  // smallest residue of maximal order

  bool trivial() const noexcept { return order == 1; }
};

struct OrbitClass {
  CmType canonical;  // lexicographic minimum of the orbit
  int orbit_size = 0;
  Stabilizer stabilizer;
};

CmType act(const PrimeContext& ctx, Residue k, const CmType& set);

/// Lexicographically smallest translate k.S over k = 1..p-1.
CmType canonical_form(const PrimeContext& ctx, const CmType& set);

Stabilizer stabilizer(const PrimeContext& ctx, const CmType& set);

/// The orbit of `set`, sorted lexicographically and without repeats.
std::vector<CmType> orbit(const PrimeContext& ctx, const CmType& set);

/// Partitions all CM types into orbits; classes come out sorted by
/// canonical representative.
std::vector<OrbitClass> orbit_classes(const PrimeContext& ctx,
                                      std::uint64_t cap = kDefaultEnumerationCap);

/// Number of orbits by Burnside's lemma. A CM type fixed by k is a union of
/// <k>-cosets; none exist when -1 lies in <k> (even order), otherwise the
/// (p-1)/ord(k) cosets split into conjugate pairs and one of each pair is
/// chosen freely.
boost::multiprecision::cpp_int burnside_count(const PrimeContext& ctx);

}  // namespace extremal
