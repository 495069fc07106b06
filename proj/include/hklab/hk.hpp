#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "hklab/poly.hpp"
#include "hklab/rank.hpp"

namespace hklab {

/// Monomials of a box bucketed by weighted degree, with a constant-time
/// position lookup.  All-zero weights put the whole box in one bucket, which
/// is how inhomogeneous operators are handled.
class BoxGrading {
public:
  BoxGrading(const Box& box, std::vector<unsigned> weights);

  const Box& box() const { return box_; }
  const std::vector<unsigned>& weights() const { return weights_; }
  std::uint64_t total() const { return total_; }
  unsigned max_degree() const { return unsigned(buckets_.size()) - 1; }
  /// Keys of the bucket, ascending; empty past max_degree().
  const std::vector<MonoKey>& bucket(unsigned degree) const;
  /// Position of a box monomial within its bucket.
  std::uint32_t position(MonoKey key) const;
  std::uint32_t position_by_exponents(const unsigned* exps) const;

private:
  std::uint64_t tight_index(const unsigned* exps) const;

  Box box_;
  std::vector<unsigned> weights_;
  std::uint64_t total_ = 0;
  std::vector<std::vector<MonoKey>> buckets_;
  std::vector<std::uint32_t> pos_;  // indexed by tight-packed exponents
};

struct GradedBlock {
  unsigned source_degree = 0;
  unsigned target_degree = 0;
  std::size_t rows = 0, cols = 0;
};

/// Multiplication by a fixed polynomial on the box quotient, split along the
/// grading.  When f is weighted-homogeneous the operator maps each degree
/// bucket into the bucket shifted by deg(f), so its rank is the sum of
/// independent dense ranks, block by block.
class GradedMap {
public:
  GradedMap(MultiPoly f, const Box& box);

  const BoxGrading& grading() const { return grading_; }
  const MultiPoly& poly() const { return f_; }
  unsigned shift() const { return shift_; }
  const std::vector<GradedBlock>& blocks() const { return blocks_; }

  PlaneMatrix build_block(std::size_t index) const;
  /// Sum of block ranks; blocks are eliminated in parallel (largest first)
  /// and the integer total is independent of the worker count.
  std::uint64_t rank(unsigned workers = 0) const;

private:
  MultiPoly f_;
  BoxGrading grading_;
  unsigned shift_ = 0;
  std::vector<GradedBlock> blocks_;
};

/// Colength of (x_i^(2^n), f) in the box quotient: side^nvars minus the rank
/// of multiplication by f.  Coefficients are first projected onto the
/// smallest subfield that spans them, so the elimination cost depends on the
/// data, not on the ambient context.
std::uint64_t hk_number(const MultiPoly& f, unsigned n, unsigned workers = 0);

/// e_n(g_alpha^j) for j = 0..jmax (index 0 is 0: the empty power is a unit).
/// With use_shortcuts, even powers above level 1 come from the level-below
/// sequence via e_(n+1)(f^(2j)) = 8 e_n(f^j) and only odd powers are
/// eliminated; verification paths pass use_shortcuts = false.
std::vector<std::uint64_t> hk_power_sequence(const FieldElement& alpha, unsigned n,
                                             std::uint64_t jmax, bool use_shortcuts = true,
                                             unsigned workers = 0);

enum class SmoothedMode { lemma_sum, direct };

/// e_n of the five-variable surface u*v + g_alpha.  lemma_sum folds the
/// three-variable power sequence (2 * sum of e_n(g^j) for j < 2^n, plus the
/// top power); direct eliminates the five-variable box and is capped at
/// direct_ceiling because its cost grows with the full box volume.
std::uint64_t hk_smoothed(const FieldElement& alpha, unsigned n, SmoothedMode mode,
                          unsigned workers = 0, unsigned direct_ceiling = 2,
                          bool use_shortcuts = true);

}  // namespace hklab
