// Truth-table counting kernels for propositional entailment over DNF
// premises. The scalar kernel is the reference; the AVX2 kernel evaluates
// eight assignments per step and must agree with it exactly.

#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace etr::tt {

inline constexpr unsigned kMaxAtoms = 20;

// Conjunction of literals as bit masks over atom indices.
struct Term {
  std::uint32_t pos = 0;
  std::uint32_t neg = 0;
};

// Disjunction of terms. An empty Dnf is false.
using Dnf = std::vector<Term>;

struct Problem {
  unsigned atom_count = 0;
  std::vector<Dnf> premises;
  Dnf conclusion;
};

struct Counts {
  std::uint64_t models = 0;          // assignments satisfying every premise
  std::uint64_t countermodels = 0;   // ... and falsifying the conclusion

  friend bool operator==(const Counts&, const Counts&) = default;
};

enum class Isa { kScalar, kAvx2 };

std::string_view ToString(Isa isa);

// Whether the AVX2 kernel was compiled in and the CPU supports it.
bool Avx2Available();

// The widest kernel usable on this machine.
Isa BestIsa();

// Throws etr::CapExceeded above kMaxAtoms; etr::Error if `isa` is unavailable.
Counts Count(const Problem& p, Isa isa);
Counts Count(const Problem& p);

namespace detail {
Counts CountScalar(const Problem& p);
#if defined(ETR_HAVE_AVX2_KERNEL)
Counts CountAvx2(const Problem& p);
#endif
}  // namespace detail

}  // namespace etr::tt
