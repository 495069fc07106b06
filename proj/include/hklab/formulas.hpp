#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace hklab {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Level sums of the bracket for a degree-m scalar, m >= 2:
///   d_0 = 4, d_n = 2^(n+3) when m | n, and 3*2^(n+1) otherwise.
/// Their generating function is the rational function evaluated by gf_eval.
std::uint64_t d_seq(unsigned n, unsigned m);

/// Degree-1 analogue: c_0 = 4 and c_n = (22*2^n + 8*(-1)^n) / 3, an exact
/// integer satisfying c_(n+2) = c_(n+1) + 2 c_n for n >= 1.
std::uint64_t c_seq(unsigned n);

/// Closed evaluation of the generating function above (the c-series when
/// m = 1).  Requires |w| < 1/2, the radius of convergence.
BigRational gf_eval(const BigRational& w, unsigned m);
/// sum of the first `terms` coefficients times w^n, exactly.
BigRational gf_partial_sum(const BigRational& w, unsigned m, unsigned terms);
/// Tail bound sum_(n >= terms) 8 (2w)^n valid for 0 < w < 1/2 (the level
/// sums satisfy d_n <= 2^(n+3)).
BigRational gf_tail_bound(const BigRational& w, unsigned terms);

struct HKPair {
  BigRational e_hk;
  BigRational s;  // e_hk + s = 2 for these hypersurfaces
};

/// Limits for the five-variable surface over a degree-m scalar:
///   s = (11 X - 18) / (28 (X - 1)) with X = 2^(3m)  for m >= 2,
///   s = 185/476                                     for m = 1,
/// and e_hk = 2 - s.
HKPair ehk_s(unsigned m);

/// e_n of the surface while every level below n still contributes the
/// pre-periodic sum 3*2^(v+1): (45*2^(4n) - 3*2^(n+3)) / 28, exact.  Valid
/// for n <= m (plus n = 2 when m = 1, where the level-1 sums agree).
BigInt closed_en_G(unsigned n, unsigned m);

/// A level-indexed value sequence e_0, e_1, ... together with the geometric
/// ratio split off when normalizing (16 for the five-variable surface).
struct HKSeries {
  std::vector<BigInt> values;
  std::uint64_t scale = 16;
};

/// s_0 = e_0 and s_n = e_n - scale * e_(n-1): the coefficients of
/// (1 - scale*w) * sum e_n w^n.
std::vector<BigInt> scaled_coefficients(const HKSeries& s);

/// Termwise product; lengths must match.
std::vector<BigInt> hadamard_product(const std::vector<BigInt>& a,
                                     const std::vector<BigInt>& b);

/// Limits for the t-fold Segre-style product of surfaces over scalars of
/// degrees ms[i] (each >= 2):
///   e_hk = 3/2 + 3^t/(2^(3t+2) - 2^(t+1))
///        + sum over nonempty S of 3^(t-|S|)/(2^((2t+1)L+t+1) - 2^(t+1)),
/// L = lcm of the chosen degrees; s = 2 - e_hk.
HKPair multi_param(const std::vector<unsigned>& ms);

/// Same limit obtained by summing the scaled series geometrically at
/// w = 2^(-3t-1); agreement with multi_param is a two-route check.
BigRational multi_param_via_series(const std::vector<unsigned>& ms);

/// Product of the per-factor level sums, prod_i d_n(ms[i]), cross-checked
/// against its case closed form (4^t at n = 0, else 3^(t-r) 2^(tn+t+2r)
/// where r counts the degrees dividing n); disagreement is a hard error.
BigInt pi_coeff(const std::vector<unsigned>& ms, unsigned n);

/// 3 + 4^(-m_lambda), the limit the three-variable cone normalizations
/// approach; requires m_lambda >= 2.
BigRational monsky_reference(unsigned m_lambda);

/// Correctly rounded fixed-point decimal (round half away from zero).
std::string decimal_string(const BigRational& x, unsigned digits);

}  // namespace hklab
