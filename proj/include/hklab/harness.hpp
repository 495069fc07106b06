#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hklab/bracket.hpp"
#include "hklab/field.hpp"
#include "hklab/formulas.hpp"

namespace hklab {

inline SigmaParams sigma_params(const ScalarProfile& p) {
  return SigmaParams{p.m_alpha, p.case_equal};
}

/// One conjecture point: the bracket against the centered second difference
/// of the level-(n+1) power values,
///   <n, j> = e(g^(2j+1)) - (e(g^(2j)) + e(g^(2j+2))) / 2.
struct VerificationReport {
  std::string alpha;
  unsigned m_alpha = 0;
  unsigned m_lambda = 0;
  bool case_equal = false;
  unsigned n = 0;
  std::uint64_t j = 0;
  std::uint64_t lhs = 0;                    // bracket value
  std::array<std::uint64_t, 3> e{};         // e_(n+1)(g^(2j)), (2j+1), (2j+2)
  BigRational rhs;
  bool pass = false;
  double elapsed_seconds = 0.0;
};

/// Verifies a single point with the even-power shortcut disabled (every
/// rank is eliminated independently).  Requires n >= 1 and j < 2^n; j = 0 is
/// the boundary extension (the empty power contributes 0).
VerificationReport verify_point(const FieldElement& alpha, unsigned n, std::uint64_t j,
                                unsigned workers = 0);

struct SweepOptions {
  unsigned max_n = 2;              // conjecture levels n = 1..max_n
  unsigned max_degree = 2;         // scalar degrees m = 1..max_degree
  bool orbits_only = true;         // one representative per Frobenius orbit
  bool include_j0 = false;         // add the j = 0 boundary points
  unsigned workers = 0;
  double time_budget_seconds = 0;  // 0 = unlimited; exceeded -> truncated
};

struct SweepSummary {
  std::size_t points = 0, passes = 0, failures = 0;
  bool truncated = false;
  std::vector<VerificationReport> reports;  // ordered by (m, alpha, n, j)
};

/// Full grid over all admissible scalars: for each degree m <= max_degree,
/// each representative alpha, each n <= max_n, every j < 2^n.  Power values
/// are computed per (alpha, n) as one shortcut-free sequence so neighbouring
/// points share no derived data with the bracket side.
SweepSummary sweep(const SweepOptions& opts);

/// e_n of the surface predicted by the symbol dynamics alone:
/// e_1 = 24, then e_(v+1) = 16 e_v + 2 * bracket_sum(v).
BigInt predicted_en(const SigmaParams& params, unsigned n);

struct ReconcileRow {
  unsigned n = 0;
  BigInt predicted;
  std::uint64_t measured = 0;
  bool match = false;
};
struct ReconcileResult {
  std::vector<ReconcileRow> rows;
  bool all_match = true;
};

/// Predicted e_n against the measured (shortcut-free lemma_sum) value for
/// n = 1..max_n.
ReconcileResult reconcile(const FieldElement& alpha, unsigned max_n, unsigned workers = 0);

struct LemmaChecks {
  bool surface_fold = true;  // direct 5-variable e_n equals the folded power sum
  bool midpoint = true;      // upper-half powers interpolate linearly
  bool doubling = true;      // e_(n+1)(g^(2j)) = 8 e_n(g^j)
  bool upper_zero = true;    // brackets vanish on the upper half range
  bool all() const { return surface_fold && midpoint && doubling && upper_zero; }
};

/// Structural identities the conjecture machinery rests on, checked on
/// freshly eliminated data for one scalar.
LemmaChecks verify_lemmas(const FieldElement& alpha, unsigned max_n, unsigned workers = 0,
                          unsigned direct_ceiling = 2);

}  // namespace hklab
