#include "hklab/pairs.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>

#include "hklab/hk.hpp"
#include "hklab/poly.hpp"

namespace hklab {
namespace {

BigRational over_8c(std::uint64_t numerator, unsigned c) {
  return BigRational(BigInt(numerator), BigInt(1) << (3 * c));
}

}  // namespace

BigRational pair_signature(const FieldElement& alpha, std::uint64_t a, unsigned c,
                           unsigned workers) {
  Box box(c, 3);
  MultiPoly f = power_mod_box(quartic(alpha), a, box);
  std::uint64_t e = hk_number(f, c, workers);
  return over_8c(box.volume() - e, c);
}

BigRational pair_signature_via_kernel(const FieldElement& alpha, std::uint64_t a, unsigned c) {
  if (c > 3) throw std::invalid_argument("pair_signature_via_kernel: c must be <= 3");
  const FieldContextPtr& ctx = alpha.context();
  if (ctx->degree() > 63)
    throw std::invalid_argument("pair_signature_via_kernel: context too large");

  Box box(c, 3);
  const std::size_t vol = box.volume();
  const std::uint64_t mask = box.side() - 1;
  MultiPoly f = power_mod_box(quartic(alpha), a, box);

  // Dense multiplication matrix, column sc = image of the sc-th box monomial.
  // Box monomials are indexed radix-2^c with variable 0 as the slowest digit.
  std::vector<std::vector<std::uint64_t>> mat(vol, std::vector<std::uint64_t>(vol, 0));
  for (std::size_t src = 0; src < vol; ++src) {
    for (const auto& [key, cf] : f.terms()) {
      std::vector<unsigned> te = mono_unpack(key, 3);
      std::uint64_t dst = 0;
      bool inside = true;
      for (unsigned v = 0; v < 3 && inside; ++v) {
        std::uint64_t pe = ((src >> (c * (2 - v))) & mask) + te[v];
        if (pe >= box.side()) inside = false;
        dst = (dst << c) | pe;
      }
      if (inside) mat[dst][src] ^= cf.word0();
    }
  }
  const std::vector<std::vector<std::uint64_t>> raw = mat;

  // Reduced row echelon form over the scalar field.
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t col = 0; col < vol && r < vol; ++col) {
    std::size_t sel = vol;
    for (std::size_t i = r; i < vol; ++i)
      if (mat[i][col]) {
        sel = i;
        break;
      }
    if (sel == vol) continue;
    std::swap(mat[sel], mat[r]);
    std::uint64_t inv = ctx->inv_word(mat[r][col]);
    if (inv != 1)
      for (std::size_t k = col; k < vol; ++k) mat[r][k] = ctx->mul_word(inv, mat[r][k]);
    for (std::size_t i = 0; i < vol; ++i) {
      if (i == r || !mat[i][col]) continue;
      std::uint64_t factor = mat[i][col];
      for (std::size_t k = col; k < vol; ++k) mat[i][k] ^= ctx->mul_word(factor, mat[r][k]);
    }
    pivot_cols.push_back(col);
    ++r;
  }

  // Kernel basis from the free columns; each vector is checked against the
  // untouched matrix before it counts.
  std::vector<bool> is_pivot(vol, false);
  for (std::size_t col : pivot_cols) is_pivot[col] = true;
  std::size_t nullity = 0;
  for (std::size_t fc = 0; fc < vol; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<std::uint64_t> v(vol, 0);
    v[fc] = 1;
    for (std::size_t pr = 0; pr < pivot_cols.size(); ++pr) v[pivot_cols[pr]] = mat[pr][fc];
    for (std::size_t row = 0; row < vol; ++row) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < vol; ++k)
        if (v[k]) acc ^= ctx->mul_word(raw[row][k], v[k]);
      if (acc != 0) throw std::logic_error("pair_signature_via_kernel: basis vector rejected");
    }
    ++nullity;
  }
  return over_8c(vol - nullity, c);
}

std::vector<PairSample> sample_curve(const FieldElement& alpha, unsigned c,
                                     std::uint64_t a_max, unsigned workers) {
  std::vector<PairSample> samples;
  samples.reserve(a_max + 1);
  for (std::uint64_t a = 0; a <= a_max; ++a) {
    PairSample sample;
    sample.a = a;
    sample.c = c;
    sample.t = BigRational(BigInt(a), BigInt(1) << c);
    sample.s = pair_signature(alpha, a, c, workers);
    samples.push_back(std::move(sample));
  }
  return samples;
}

std::vector<BigRational> derivative_estimates(const std::vector<PairSample>& samples) {
  std::vector<BigRational> derivs;
  if (samples.size() < 2) return derivs;
  for (std::size_t k = 0; k + 1 < samples.size(); ++k) {
    if (samples[k + 1].a != samples[k].a + 1 || samples[k + 1].c != samples[k].c)
      throw std::invalid_argument("derivative_estimates: samples must be consecutive");
    derivs.push_back((samples[k + 1].s - samples[k].s) * (BigInt(1) << samples[k].c));
  }
  return derivs;
}

std::string curve_csv(const FieldElement& alpha, unsigned c, std::uint64_t a_max,
                      unsigned workers) {
  ScalarProfile prof = artin_schreier(alpha).profile;
  std::vector<PairSample> samples = sample_curve(alpha, c, a_max, workers);
  std::vector<BigRational> derivs = derivative_estimates(samples);

  std::string out = "m_alpha,m_lambda,c,a,t_decimal,s_exact,s_decimal,deriv_decimal\n";
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const PairSample& s = samples[k];
    out += std::to_string(prof.m_alpha) + ',' + std::to_string(prof.m_lambda) + ',';
    out += std::to_string(s.c) + ',' + std::to_string(s.a) + ',';
    out += decimal_string(s.t, 6) + ',' + s.s.str() + ',' + decimal_string(s.s, 6) + ',';
    if (k < derivs.size()) out += decimal_string(derivs[k], 6);
    out += '\n';
  }
  return out;
}

}  // namespace hklab
