#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hklab/field.hpp"
#include "hklab/formulas.hpp"

namespace hklab {

/// Normalized image of multiplication by g_alpha^a on the level-c box:
/// rank / 8^c in lowest terms.  a = 0 is the unit map (value 1); large a let
/// the power die inside the box and the value drop to 0.
BigRational pair_signature(const FieldElement& alpha, std::uint64_t a, unsigned c,
                           unsigned workers = 0);

/// The same value through the annihilator: a dense scalar elimination builds
/// an explicit kernel basis (every basis vector is re-multiplied against the
/// untouched matrix), and the result is (volume - nullity) / 8^c.  Serves as
/// a cross-check for the graded route; limited to c <= 3.
BigRational pair_signature_via_kernel(const FieldElement& alpha, std::uint64_t a, unsigned c);

struct PairSample {
  std::uint64_t a = 0;
  unsigned c = 0;
  BigRational t;  // a / 2^c
  BigRational s;  // signature at a
};

/// Signature samples for a = 0..a_max on one level.
std::vector<PairSample> sample_curve(const FieldElement& alpha, unsigned c,
                                     std::uint64_t a_max, unsigned workers = 0);

/// Forward difference quotients (s_(k+1) - s_k) * 2^c, one per gap, attached
/// to the left endpoint.  Samples must be consecutive on a single level.
std::vector<BigRational> derivative_estimates(const std::vector<PairSample>& samples);

/// CSV rows m_alpha,m_lambda,c,a,t_decimal,s_exact,s_decimal,deriv_decimal;
/// decimals are rounded to 6 places and the last row's derivative is empty.
std::string curve_csv(const FieldElement& alpha, unsigned c, std::uint64_t a_max,
                      unsigned workers = 0);

}  // namespace hklab
