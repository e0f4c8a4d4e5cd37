#include "extremal/orbit_engine.hpp"

#include <algorithm>
#include <bit>

#include "extremal/error.hpp"

namespace extremal {

CmType act(const PrimeContext& ctx, Residue k, const CmType& set) {
  ctx.require_unit(k);
  ResidueSet out;
  out.reserve(set.members().size());
  for (Residue s : set.members()) out.push_back(ctx.mul(k, s));
  std::sort(out.begin(), out.end());
  return CmType(ctx, std::move(out), CmType::Trusted{});
}

CmType canonical_form(const PrimeContext& ctx, const CmType& set) {
  CmType best = set;
  for (Residue k = 2; k < ctx.p(); ++k) {
    CmType t = act(ctx, k, set);
    if (t < best) best = std::move(t);
  }
  return best;
}

Stabilizer stabilizer(const PrimeContext& ctx, const CmType& set) {
  Stabilizer h;
  h.elements.clear();
  for (Residue k = 1; k < ctx.p(); ++k)
    if (act(ctx, k, set) == set) h.elements.push_back(k);
  h.order = static_cast<int>(h.elements.size());
  for (Residue k : h.elements) {
    if (element_order(ctx, k) == h.order) {
      h.generator = k;
      break;
    }
  }
  return h;
}

std::vector<CmType> orbit(const PrimeContext& ctx, const CmType& set) {
  std::vector<CmType> out;
  for (Residue k = 1; k < ctx.p(); ++k) out.push_back(act(ctx, k, set));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// Residue k <-> bit k-1. Enumerable p never exceeds 65, so one word holds
// a whole subset of F_p^*.
class MaskAction {
 public:
  explicit MaskAction(const PrimeContext& ctx) : ctx_(ctx) {}

  std::uint64_t act(Residue k, std::uint64_t mask) const {
    std::uint64_t out = 0;
    while (mask) {
      int bit = std::countr_zero(mask);
      mask &= mask - 1;
      out |= std::uint64_t{1} << (ctx_.mul(k, bit + 1) - 1);
    }
    return out;
  }

  std::uint64_t from_choice(std::uint64_t choice) const {
    std::uint64_t mask = 0;
    for (int i = 0; i < ctx_.g(); ++i) {
      Residue k = ((choice >> i) & 1U) ? ctx_.p() - (i + 1) : i + 1;
      mask |= std::uint64_t{1} << (k - 1);
    }
    return mask;
  }

  std::uint64_t to_choice(std::uint64_t mask) const {
    std::uint64_t choice = 0;
    for (int i = 0; i < ctx_.g(); ++i)
      if ((mask >> (ctx_.p() - i - 2)) & 1U) choice |= std::uint64_t{1} << i;
    return choice;
  }

 private:
  PrimeContext ctx_;
};

}  // namespace

std::vector<OrbitClass> orbit_classes(const PrimeContext& ctx, std::uint64_t cap) {
  require_enumerable(ctx, cap);
  const int g = ctx.g();
  const std::uint64_t count = std::uint64_t{1} << g;
  MaskAction action(ctx);

  std::vector<bool> seen(count, false);
  std::vector<OrbitClass> classes;
  std::uint64_t covered = 0;
  // Sweeping in lex order, the first member met of each orbit is its minimum.
  for (std::uint64_t n = 0; n < count && covered < count; ++n) {
    const std::uint64_t choice = lex_rank_to_choice(g, n);
    if (seen[choice]) continue;
    const std::uint64_t mask = action.from_choice(choice);
    int orbit_size = 0;
    Stabilizer h;
    h.elements.clear();
    for (Residue k = 1; k < ctx.p(); ++k) {
      const std::uint64_t image = action.act(k, mask);
      if (image == mask) h.elements.push_back(k);
      const std::uint64_t c = action.to_choice(image);
      if (!seen[c]) {
        seen[c] = true;
        ++orbit_size;
      }
    }
    h.order = static_cast<int>(h.elements.size());
    for (Residue k : h.elements) {
      if (element_order(ctx, k) == h.order) {
        h.generator = k;
        break;
      }
    }
    covered += static_cast<std::uint64_t>(orbit_size);
    classes.push_back({CmType::from_choice(ctx, choice), orbit_size, std::move(h)});
  }
  if (covered != count)
    throw Error(ErrorKind::InternalConsistency, "orbit sweep did not cover every CM type");
  return classes;
}

boost::multiprecision::cpp_int burnside_count(const PrimeContext& ctx) {
  using boost::multiprecision::cpp_int;
  cpp_int total = 0;
  for (Residue k = 1; k < ctx.p(); ++k) {
    const int d = element_order(ctx, k);
    if (d % 2 == 0) continue;
    const int coset_pairs = (ctx.p() - 1) / d / 2;
    total += cpp_int(1) << coset_pairs;
  }
  const cpp_int group = ctx.p() - 1;
  if (total % group != 0)
    throw Error(ErrorKind::InternalConsistency, "Burnside sum not divisible by p-1");
  return total / group;
}

}  // namespace extremal
