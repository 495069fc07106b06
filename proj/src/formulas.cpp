#include "hklab/formulas.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hklab {

namespace {

constexpr unsigned kMaxSeqIndex = 60;

BigInt pow2(unsigned e) { return BigInt(1) << e; }

BigInt pow_int(BigInt base, unsigned e) {
  BigInt r = 1;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

void check_degrees(const std::vector<unsigned>& ms) {
  if (ms.empty() || ms.size() > 16)
    throw std::invalid_argument("between 1 and 16 scalar degrees expected");
  for (unsigned m : ms)
    if (m < 2) throw std::invalid_argument("multi-parameter degrees must be >= 2");
}

unsigned lcm_of_subset(const std::vector<unsigned>& ms, unsigned mask) {
  unsigned l = 1;
  for (std::size_t i = 0; i < ms.size(); ++i)
    if ((mask >> i) & 1) l = unsigned(std::lcm(l, ms[i]));
  return l;
}

}  // namespace

std::uint64_t d_seq(unsigned n, unsigned m) {
  if (m < 2) throw std::invalid_argument("d_seq needs a degree >= 2 (use c_seq for degree 1)");
  if (n > kMaxSeqIndex) throw std::domain_error("level sum index out of the 64-bit range");
  if (n == 0) return 4;
  if (n % m == 0) return std::uint64_t(1) << (n + 3);
  return 3 * (std::uint64_t(1) << (n + 1));
}

std::uint64_t c_seq(unsigned n) {
  if (n > kMaxSeqIndex) throw std::domain_error("level sum index out of the 64-bit range");
  if (n == 0) return 4;
  std::uint64_t p = std::uint64_t(1) << n;
  std::uint64_t num = (n % 2 == 0) ? 22 * p + 8 : 22 * p - 8;
  if (num % 3 != 0) throw std::logic_error("level sum failed integrality");
  return num / 3;
}

BigRational gf_eval(const BigRational& w, unsigned m) {
  if (m == 0) throw std::invalid_argument("scalar degree must be >= 1");
  if (abs(w) * 2 >= 1) throw std::domain_error("series evaluated outside |w| < 1/2");
  if (m == 1) {
    // -6 + 2(w+5) / ((w+1)(1-2w))
    return BigRational(-6) + BigRational(2) * (w + 5) / ((w + 1) * (1 - 2 * w));
  }
  BigRational wm = pow_int(numerator(w), m);
  wm /= pow_int(denominator(w), m);
  BigRational num = BigRational(pow2(m + 3)) * wm * w + BigRational(pow2(m + 1)) * wm - 4 * w - 4;
  BigRational den = (1 - 2 * w) * (BigRational(pow2(m)) * wm - 1);
  return num / den;
}

BigRational gf_partial_sum(const BigRational& w, unsigned m, unsigned terms) {
  if (m == 0) throw std::invalid_argument("scalar degree must be >= 1");
  BigRational sum = 0, wp = 1;
  for (unsigned n = 0; n < terms; ++n) {
    std::uint64_t coeff = (m == 1) ? c_seq(n) : d_seq(n, m);
    sum += BigRational(coeff) * wp;
    wp *= w;
  }
  return sum;
}

BigRational gf_tail_bound(const BigRational& w, unsigned terms) {
  if (w <= 0 || 2 * w >= 1) throw std::domain_error("tail bound needs 0 < w < 1/2");
  // sum_(n >= terms) 8 (2w)^n = 8 (2w)^terms / (1 - 2w)
  BigRational r = 2 * w;
  BigRational p = pow_int(numerator(r), terms);
  p /= pow_int(denominator(r), terms);
  return 8 * p / (1 - r);
}

HKPair ehk_s(unsigned m) {
  if (m == 0) throw std::invalid_argument("scalar degree must be >= 1");
  if (m == 1) return {BigRational(767, 476), BigRational(185, 476)};
  BigInt X = pow2(3 * m);
  BigRational s(11 * X - 18, 28 * (X - 1));
  return {2 - s, s};
}

BigInt closed_en_G(unsigned n, unsigned m) {
  if (m == 0) throw std::invalid_argument("scalar degree must be >= 1");
  if (n == 0) return 1;
  bool valid = (n <= m) || (m == 1 && n <= 2);
  if (!valid)
    throw std::domain_error("closed form only covers levels up to the scalar degree");
  BigInt num = 45 * pow2(4 * n) - 3 * pow2(n + 3);
  if (num % 28 != 0) throw std::logic_error("closed form failed integrality");
  return num / 28;
}

std::vector<BigInt> scaled_coefficients(const HKSeries& s) {
  std::vector<BigInt> out;
  out.reserve(s.values.size());
  for (std::size_t i = 0; i < s.values.size(); ++i)
    out.push_back(i == 0 ? s.values[0] : s.values[i] - BigInt(s.scale) * s.values[i - 1]);
  return out;
}

std::vector<BigInt> hadamard_product(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("series length mismatch");
  std::vector<BigInt> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] * b[i]);
  return out;
}

HKPair multi_param(const std::vector<unsigned>& ms) {
  check_degrees(ms);
  unsigned t = unsigned(ms.size());
  BigRational e(3, 2);
  e += BigRational(pow_int(3, t), pow2(3 * t + 2) - pow2(t + 1));
  for (unsigned mask = 1; mask < (1u << t); ++mask) {
    unsigned r = unsigned(std::popcount(mask));
    unsigned L = lcm_of_subset(ms, mask);
    e += BigRational(pow_int(3, t - r), pow2((2 * t + 1) * L + t + 1) - pow2(t + 1));
  }
  return {e, 2 - e};
}

BigRational multi_param_via_series(const std::vector<unsigned>& ms) {
  check_degrees(ms);
  unsigned t = unsigned(ms.size());
  const BigRational w(BigInt(1), pow2(3 * t + 1));
  BigRational v = 1;
  v += BigRational(pow_int(8, t)) * w;
  v += BigRational(pow_int(24, t)) * w * w / (1 - BigRational(pow2(t)) * w);
  for (unsigned mask = 1; mask < (1u << t); ++mask) {
    unsigned r = unsigned(std::popcount(mask));
    unsigned L = lcm_of_subset(ms, mask);
    BigRational wL(BigInt(1), pow2((3 * t + 1) * L));  // w^L
    v += BigRational(pow_int(3, t - r)) * BigRational(pow2(t * L + 2 * t)) * wL * w /
         (1 - BigRational(pow2(t * L)) * wL);
  }
  return v;
}

BigInt pi_coeff(const std::vector<unsigned>& ms, unsigned n) {
  check_degrees(ms);
  unsigned t = unsigned(ms.size());
  BigInt literal = 1;
  for (unsigned m : ms) literal *= d_seq(n, m);
  BigInt closed;
  if (n == 0) {
    closed = pow_int(4, t);
  } else {
    unsigned r = 0;
    for (unsigned m : ms)
      if (n % m == 0) ++r;
    closed = pow_int(3, t - r) * pow2(t * n + t + 2 * r);
  }
  if (literal != closed) throw std::logic_error("product coefficient routes disagree");
  return literal;
}

BigRational monsky_reference(unsigned m_lambda) {
  if (m_lambda < 2) throw std::invalid_argument("splitting degree is always >= 2");
  return BigRational(3 * pow2(2 * m_lambda) + 1, pow2(2 * m_lambda));
}

std::string decimal_string(const BigRational& x, unsigned digits) {
  BigInt num = numerator(x), den = denominator(x);
  bool neg = num < 0;
  if (neg) num = -num;
  BigInt scaled = num * pow_int(10, digits);
  BigInt q = scaled / den, r = scaled % den;
  if (2 * r >= den) ++q;
  std::ostringstream os;
  if (digits == 0) {
    os << (neg && q != 0 ? "-" : "") << q;
    return os.str();
  }
  BigInt ip = q / pow_int(10, digits), fp = q % pow_int(10, digits);
  std::string frac = fp.str();
  frac.insert(0, digits - frac.size(), '0');
  os << (neg && q != 0 ? "-" : "") << ip << "." << frac;
  return os.str();
}

}  // namespace hklab
