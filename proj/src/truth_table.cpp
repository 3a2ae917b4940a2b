#include "etr/truth_table.hpp"

#include "etr/error.hpp"

namespace etr::tt {

namespace detail {

namespace {

bool Satisfies(std::uint32_t assignment, const Dnf& f) {
  for (const Term& t : f)
    if ((assignment & t.pos) == t.pos && (assignment & t.neg) == 0) return true;
  return false;
}

}  // namespace

Counts CountScalar(const Problem& p) {
  Counts c;
  const std::uint64_t total = std::uint64_t{1} << p.atom_count;
  for (std::uint64_t a = 0; a < total; ++a) {
    const auto assignment = static_cast<std::uint32_t>(a);
    bool all = true;
    for (const Dnf& f : p.premises)
      if (!Satisfies(assignment, f)) {
        all = false;
        break;
      }
    if (!all) continue;
    ++c.models;
    if (!Satisfies(assignment, p.conclusion)) ++c.countermodels;
  }
  return c;
}

}  // namespace detail

std::string_view ToString(Isa isa) { return isa == Isa::kAvx2 ? "avx2" : "scalar"; }

bool Avx2Available() {
#if defined(ETR_HAVE_AVX2_KERNEL)
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported;
#else
  return false;
#endif
}

Isa BestIsa() { return Avx2Available() ? Isa::kAvx2 : Isa::kScalar; }

Counts Count(const Problem& p, Isa isa) {
  if (p.atom_count > kMaxAtoms)
    throw CapExceeded("truth table over " + std::to_string(p.atom_count) +
                      " atoms exceeds the cap of " + std::to_string(kMaxAtoms));
  if (isa == Isa::kAvx2) {
#if defined(ETR_HAVE_AVX2_KERNEL)
    if (Avx2Available()) return detail::CountAvx2(p);
#endif
    throw Error("avx2 kernel not available on this machine");
  }
  return detail::CountScalar(p);
}

Counts Count(const Problem& p) { return Count(p, BestIsa()); }

}  // namespace etr::tt
