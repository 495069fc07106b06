#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <utility>

namespace hklab {

/// Parameters steering the substitution pair: the degree m of the quartic's
/// scalar and which of the two splitting cases it falls in (case_equal means
/// the Artin-Schreier root generates no proper extension).
struct SigmaParams {
  unsigned m_alpha = 1;
  bool case_equal = false;
};

/// Element a*A_n + b*B_n + c*C + d*D of the free abelian group on the level
/// symbols; `level` is the n carried by A_n and B_n.  Reachable states keep
/// a, b, d in {0, 1} with d only at level 0, but the morphisms are defined
/// additively on the whole group.
struct GroupVector {
  unsigned level = 0;
  std::int64_t a = 0, b = 0, c = 0, d = 0;
  bool operator==(const GroupVector&) const = default;
};

/// 2C + D, the level-0 seed.
GroupVector initial_state();

/// One substitution step (bit selects which of the two morphisms).  The
/// A-symbol promotes to B when the next level index is a multiple of m whose
/// quotient parity matches the bit (parities swap in the equal case); the
/// B-symbol either dies by the same parity rule on its own index or emits
/// A + C; C is inert; D seeds A_1 on bit 0 and dies on bit 1.
GroupVector apply_sigma(const GroupVector& s, int bit, const SigmaParams& p);

/// State after driving the seed by the n bits of j, most significant first.
/// Requires j < 2^n.
GroupVector state(unsigned n, std::uint64_t j, const SigmaParams& p);

/// The bracket evaluation (3a + 5b + d) * 2^c of a state / of (n, j).
std::uint64_t bracket_value(const GroupVector& s);
std::uint64_t bracket_value(unsigned n, std::uint64_t j, const SigmaParams& p);

/// Multiset of level-n states over all j < 2^n, evolved state-by-state in
/// O(n^2) instead of walking 2^n paths.
struct SymbolDistribution {
  unsigned level = 0;
  std::map<std::array<std::int64_t, 4>, std::uint64_t> counts;  // (a,b,c,d) -> #j
};
SymbolDistribution level_distribution(unsigned n, const SigmaParams& p);

/// Number of j < 2^n whose state is A_n + t*C, respectively B_n + t*C.
std::pair<std::uint64_t, std::uint64_t> count_ab(unsigned n, std::int64_t t,
                                                 const SigmaParams& p);

/// Sum of bracket_value(n, j) over all j < 2^n.
std::uint64_t bracket_sum(unsigned n, const SigmaParams& p);

/// Closed form for the A-count (independent of the splitting case): with
/// r = ceil(n/m) and i = n - m*(r-1),
///   m = 1:  binom(n+1-t, t-2)
///   m > 1:  2^((m-1)r + 1 - t) * binom(r-1, t-2)          when i = m
///           2^((m-1)r + i + 2 - t - m) * binom(r-1, t-2)  when i < m
/// and 0 whenever the parameters leave the valid range.
std::uint64_t closed_form_count(unsigned n, unsigned t, unsigned m_alpha);

}  // namespace hklab
