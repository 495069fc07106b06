#include "hklab/field.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace hklab {
namespace {

using Bits = std::vector<std::uint64_t>;

int bit_degree(const Bits& p) {
  for (std::size_t i = p.size(); i-- > 0;)
    if (p[i]) return int(i * 64 + 63 - std::size_t(std::countl_zero(p[i])));
  return -1;
}

bool get_bit(const Bits& p, std::size_t i) {
  std::size_t w = i / 64;
  return w < p.size() && ((p[w] >> (i % 64)) & 1);
}

void set_bit(Bits& p, std::size_t i) {
  std::size_t w = i / 64;
  if (w >= p.size()) p.resize(w + 1, 0);
  p[w] |= std::uint64_t(1) << (i % 64);
}

void trim(Bits& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// a ^= b << shift, growing a as needed
void xor_shifted(Bits& a, const Bits& b, std::size_t shift) {
  std::size_t ws = shift / 64, bs = shift % 64;
  if (a.size() < b.size() + ws + 1) a.resize(b.size() + ws + 1, 0);
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (!b[i]) continue;
    a[i + ws] ^= b[i] << bs;
    if (bs) a[i + ws + 1] ^= b[i] >> (64 - bs);
  }
}

void f2_mod(Bits& a, const Bits& f) {
  int df = bit_degree(f);
  for (int d = bit_degree(a); d >= df; --d)
    if (get_bit(a, std::size_t(d))) xor_shifted(a, f, std::size_t(d - df));
  trim(a);
}

std::uint64_t spread32(std::uint32_t x) {
  std::uint64_t v = x;
  v = (v | (v << 16)) & 0x0000ffff0000ffffULL;
  v = (v | (v << 8)) & 0x00ff00ff00ff00ffULL;
  v = (v | (v << 4)) & 0x0f0f0f0f0f0f0f0fULL;
  v = (v | (v << 2)) & 0x3333333333333333ULL;
  v = (v | (v << 1)) & 0x5555555555555555ULL;
  return v;
}

Bits f2_sqr(const Bits& a) {
  Bits out(2 * a.size() + 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[2 * i] = spread32(std::uint32_t(a[i]));
    out[2 * i + 1] = spread32(std::uint32_t(a[i] >> 32));
  }
  trim(out);
  return out;
}

Bits f2_gcd(Bits a, Bits b) {
  trim(a);
  trim(b);
  while (bit_degree(b) >= 0) {
    f2_mod(a, b);
    std::swap(a, b);
  }
  return a;
}

std::size_t popcount_bits(const Bits& p) {
  std::size_t c = 0;
  for (auto w : p) c += std::size_t(std::popcount(w));
  return c;
}

// Rabin test: f of degree n is irreducible iff x^(2^n) = x mod f and
// gcd(x^(2^k) - x, f) = 1 for every proper divisor k of n.
bool is_irreducible(const Bits& f, unsigned n) {
  Bits r;
  set_bit(r, 1);  // x
  for (unsigned i = 1; i <= n; ++i) {
    r = f2_sqr(r);
    f2_mod(r, f);
    if (i < n && n % i == 0) {
      Bits t = r;
      if (t.empty()) t.resize(1, 0);
      t[0] ^= 2;  // r + x
      if (bit_degree(f2_gcd(t, f)) != 0) return false;
    }
  }
  Bits x;
  set_bit(x, 1);
  trim(r);
  return r == x;
}

Bits smallest_irreducible(unsigned n) {
  if (n == 1) return Bits{0x3};  // x + 1
  Bits mid{0};                   // counter for the x^1..x^(n-1) coefficients
  for (;;) {
    Bits f(mid.size() + 1, 0);
    xor_shifted(f, mid, 1);
    set_bit(f, 0);
    set_bit(f, n);
    // f(1) must be 1, i.e. odd weight, or x+1 divides f
    if ((popcount_bits(f) & 1) && is_irreducible(f, n)) {
      trim(f);
      return f;
    }
    for (std::size_t i = 0;; ++i) {  // increment the counter
      if (i >= mid.size()) mid.resize(i + 1, 0);
      if (++mid[i] != 0) break;
    }
  }
}

// Dense F_2 linear systems, one equation per row.  Small and cold: the sizes
// seen here are bounded by the ambient field degree.
struct F2System {
  std::size_t rows = 0, cols = 0, rw = 0;
  std::vector<std::uint64_t> a;  // row-major, rw words per row; col `cols` = rhs
  std::vector<std::size_t> pivot_col;
  std::vector<std::size_t> pivot_row_of_col;

  F2System(std::size_t r, std::size_t c) : rows(r), cols(c), rw((c + 1 + 63) / 64), a(r * rw, 0) {}

  void set(std::size_t r, std::size_t c, bool v) {
    if (v) a[r * rw + c / 64] |= std::uint64_t(1) << (c % 64);
  }
  bool get(std::size_t r, std::size_t c) const {
    return (a[r * rw + c / 64] >> (c % 64)) & 1;
  }
  void xor_rows(std::size_t dst, std::size_t src) {
    for (std::size_t k = 0; k < rw; ++k) a[dst * rw + k] ^= a[src * rw + k];
  }

  void rref() {
    pivot_col.clear();
    pivot_row_of_col.assign(cols, SIZE_MAX);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
      std::size_t p = SIZE_MAX;
      for (std::size_t r = rank; r < rows; ++r)
        if (get(r, c)) { p = r; break; }
      if (p == SIZE_MAX) continue;
      if (p != rank)
        for (std::size_t k = 0; k < rw; ++k)
          std::swap(a[p * rw + k], a[rank * rw + k]);
      for (std::size_t r = 0; r < rows; ++r)
        if (r != rank && get(r, c)) xor_rows(r, rank);
      pivot_row_of_col[c] = rank;
      pivot_col.push_back(c);
      ++rank;
    }
  }

  // Particular solution with free variables zeroed; nullopt if inconsistent.
  // Call rref() first.
  bool solve(std::vector<bool>& x) const {
    for (std::size_t r = pivot_col.size(); r < rows; ++r)
      if (get(r, cols)) return false;
    x.assign(cols, false);
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
      x[pivot_col[i]] = get(i, cols);
    return true;
  }

  // Basis of the homogeneous nullspace (rhs ignored).  Call rref() first.
  std::vector<std::vector<bool>> nullspace() const {
    std::vector<std::vector<bool>> basis;
    for (std::size_t c = 0; c < cols; ++c) {
      if (pivot_row_of_col[c] != SIZE_MAX) continue;
      std::vector<bool> v(cols, false);
      v[c] = true;
      for (std::size_t i = 0; i < pivot_col.size(); ++i)
        if (get(i, c)) v[pivot_col[i]] = true;
      basis.push_back(std::move(v));
    }
    return basis;
  }
};

}  // namespace

FieldContext::FieldContext(unsigned degree) : degree_(degree) {
  if (degree == 0) throw std::invalid_argument("field degree must be >= 1");
  words_ = (degree + 63) / 64;
  modulus_ = smallest_irreducible(degree);
  modulus_.resize(degree / 64 + 1, 0);
}

FieldContextPtr FieldContext::get(unsigned degree) {
  static std::mutex mu;
  static std::map<unsigned, FieldContextPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[degree];
  if (!slot) slot = FieldContextPtr(new FieldContext(degree));
  return slot;
}

std::string FieldContext::modulus_string() const {
  std::ostringstream os;
  bool first = true;
  for (int d = int(degree_); d >= 0; --d) {
    if (!get_bit(modulus_, std::size_t(d))) continue;
    if (!first) os << " + ";
    if (d == 0)
      os << "1";
    else if (d == 1)
      os << "x";
    else
      os << "x^" << d;
    first = false;
  }
  return os.str();
}

void FieldContext::reduce(std::uint64_t* acc) const {
  for (int d = int(2 * degree_) - 2; d >= int(degree_); --d) {
    std::size_t w = std::size_t(d) / 64;
    if (!((acc[w] >> (d % 64)) & 1)) continue;
    std::size_t shift = std::size_t(d) - degree_, ws = shift / 64, bs = shift % 64;
    for (std::size_t j = 0; j < modulus_.size(); ++j) {
      std::uint64_t mj = modulus_[j];
      if (!mj) continue;
      acc[j + ws] ^= mj << bs;
      if (bs) acc[j + ws + 1] ^= mj >> (64 - bs);
    }
  }
}

void FieldContext::add(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* out) const {
  for (std::size_t i = 0; i < words_; ++i) out[i] = a[i] ^ b[i];
}

void FieldContext::mul(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* out) const {
  std::vector<std::uint64_t> acc(2 * words_ + 1, 0);
  for (std::size_t i = 0; i < words_; ++i) {
    std::uint64_t w = a[i];
    while (w) {
      int k = std::countr_zero(w);
      w &= w - 1;
      std::size_t shift = i * 64 + std::size_t(k), ws = shift / 64, bs = shift % 64;
      for (std::size_t j = 0; j < words_; ++j) {
        if (!b[j]) continue;
        acc[j + ws] ^= b[j] << bs;
        if (bs) acc[j + ws + 1] ^= b[j] >> (64 - bs);
      }
    }
  }
  reduce(acc.data());
  std::copy(acc.begin(), acc.begin() + std::ptrdiff_t(words_), out);
}

void FieldContext::sqr(const std::uint64_t* a, std::uint64_t* out) const {
  std::vector<std::uint64_t> acc(2 * words_ + 1, 0);
  for (std::size_t i = 0; i < words_; ++i) {
    acc[2 * i] = spread32(std::uint32_t(a[i]));
    acc[2 * i + 1] = spread32(std::uint32_t(a[i] >> 32));
  }
  reduce(acc.data());
  std::copy(acc.begin(), acc.begin() + std::ptrdiff_t(words_), out);
}

void FieldContext::inv(const std::uint64_t* a, std::uint64_t* out) const {
  Bits r0 = modulus_, r1(a, a + words_), t0, t1{1};
  trim(r0);
  trim(r1);
  if (r1.empty()) throw std::domain_error("inverse of zero");
  while (bit_degree(r1) > 0) {
    int d1 = bit_degree(r1);
    Bits r = r0, t = t0;
    for (int d = bit_degree(r); d >= d1; --d)
      if (get_bit(r, std::size_t(d))) {
        xor_shifted(r, r1, std::size_t(d - d1));
        xor_shifted(t, t1, std::size_t(d - d1));
      }
    trim(r);
    r0 = std::move(r1);
    t0 = std::move(t1);
    r1 = std::move(r);
    t1 = std::move(t);
  }
  // r1 == 1 since the modulus is irreducible and a != 0
  trim(t1);
  t1.resize(words_, 0);
  std::copy(t1.begin(), t1.end(), out);
}

std::uint64_t FieldContext::mul_word(std::uint64_t a, std::uint64_t b) const {
  unsigned __int128 acc = 0;
  while (b) {
    int k = std::countr_zero(b);
    b &= b - 1;
    acc ^= static_cast<unsigned __int128>(a) << k;
  }
  const auto m = static_cast<unsigned __int128>(modulus_[0]);
  for (int d = 2 * int(degree_) - 2; d >= int(degree_); --d)
    if ((acc >> d) & 1) acc ^= m << (d - int(degree_));
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t FieldContext::inv_word(std::uint64_t a) const {
  std::uint64_t out = 0;
  inv(&a, &out);
  return out;
}

FieldElement FieldContext::zero() const {
  return FieldElement(shared_from_this(), Bits(words_, 0));
}

FieldElement FieldContext::one() const { return from_uint(1); }

FieldElement FieldContext::generator() const {
  if (degree_ == 1) return from_uint(1);  // x = 1 mod x+1
  return from_uint(2);
}

FieldElement FieldContext::from_uint(std::uint64_t bits) const {
  if (degree_ < 64 && (bits >> degree_) != 0)
    throw std::invalid_argument("element bits exceed field degree");
  Bits w(words_, 0);
  w[0] = bits;
  return FieldElement(shared_from_this(), std::move(w));
}

FieldElement FieldContext::from_bits(Bits bits) const {
  if (bit_degree(bits) >= int(degree_))
    throw std::invalid_argument("element bits exceed field degree");
  bits.resize(words_, 0);
  return FieldElement(shared_from_this(), std::move(bits));
}

namespace {
void require_context(const FieldElement& e) {
  if (!e.context()) throw std::invalid_argument("detached field element");
}
void require_same(const FieldElement& a, const FieldElement& b) {
  require_context(a);
  require_context(b);
  if (a.context() != b.context()) throw std::invalid_argument("field context mismatch");
}
}  // namespace

std::uint64_t FieldElement::to_uint() const {
  require_context(*this);
  if (ctx_->words() != 1) throw std::domain_error("element too wide for to_uint");
  return w_[0];
}

bool FieldElement::is_zero() const {
  for (auto w : w_)
    if (w) return false;
  return !w_.empty();
}

bool FieldElement::is_one() const {
  if (w_.empty() || w_[0] != 1) return false;
  for (std::size_t i = 1; i < w_.size(); ++i)
    if (w_[i]) return false;
  return true;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  FieldElement r = *this;
  r += o;
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  require_same(*this, o);
  ctx_->add(w_.data(), o.w_.data(), w_.data());
  return *this;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same(*this, o);
  FieldElement r(ctx_, Bits(ctx_->words(), 0));
  ctx_->mul(w_.data(), o.w_.data(), r.w_.data());
  return r;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  *this = *this * o;
  return *this;
}

bool FieldElement::operator==(const FieldElement& o) const {
  require_same(*this, o);
  return w_ == o.w_;
}

bool FieldElement::operator<(const FieldElement& o) const {
  require_same(*this, o);
  for (std::size_t i = w_.size(); i-- > 0;)
    if (w_[i] != o.w_[i]) return w_[i] < o.w_[i];
  return false;
}

FieldElement FieldElement::inverse() const {
  require_context(*this);
  FieldElement r(ctx_, Bits(ctx_->words(), 0));
  ctx_->inv(w_.data(), r.w_.data());
  return r;
}

FieldElement FieldElement::pow(std::uint64_t k) const {
  require_context(*this);
  FieldElement base = *this, acc = ctx_->one();
  while (k) {
    if (k & 1) acc *= base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

FieldElement FieldElement::frobenius(unsigned k) const {
  require_context(*this);
  k %= ctx_->degree();
  FieldElement r = *this;
  for (unsigned i = 0; i < k; ++i) {
    FieldElement s(ctx_, Bits(ctx_->words(), 0));
    ctx_->sqr(r.w_.data(), s.w_.data());
    r = std::move(s);
  }
  return r;
}

unsigned element_degree(const FieldElement& e) {
  require_context(e);
  FieldElement cur = e;
  for (unsigned i = 1; i <= e.context()->degree(); ++i) {
    cur = cur.frobenius();
    if (cur == e) return i;
  }
  throw std::logic_error("element degree exceeds context degree");
}

unsigned absolute_trace(const FieldElement& e) {
  unsigned d = element_degree(e);
  FieldElement s = e, cur = e;
  for (unsigned i = 1; i < d; ++i) {
    cur = cur.frobenius();
    s += cur;
  }
  if (s.is_zero()) return 0;
  if (s.is_one()) return 1;
  throw std::logic_error("trace landed outside the prime field");
}

std::vector<std::uint64_t> minimal_polynomial(const FieldElement& e) {
  require_context(e);
  unsigned m = element_degree(e);
  std::size_t n = e.context()->degree();
  std::vector<FieldElement> powers;
  powers.reserve(m + 1);
  FieldElement p = e.context()->one();
  for (unsigned i = 0; i <= m; ++i) {
    powers.push_back(p);
    p *= e;
  }
  F2System sys(n, m);
  for (std::size_t b = 0; b < n; ++b) {
    for (unsigned i = 0; i < m; ++i) sys.set(b, i, get_bit(powers[i].bits(), b));
    sys.set(b, m, get_bit(powers[m].bits(), b));  // rhs = e^m
  }
  sys.rref();
  std::vector<bool> c;
  if (!sys.solve(c)) throw std::logic_error("minimal polynomial system inconsistent");
  Bits out;
  set_bit(out, m);
  for (unsigned i = 0; i < m; ++i)
    if (c[i]) set_bit(out, i);
  return out;
}

namespace {

constexpr unsigned kScanLimit = 26;  // 2^26 evaluations is the root-scan ceiling

FieldElement poly_eval(const Bits& p, const FieldElement& t) {
  FieldElement r = t.context()->zero();
  for (int d = bit_degree(p); d >= 0; --d) {
    r = r * t;
    if (get_bit(p, std::size_t(d))) r += t.context()->one();
  }
  return r;
}

FieldElement smallest_root(const Bits& p, const FieldContextPtr& target) {
  if (target->degree() > kScanLimit)
    throw std::domain_error("canonical root scan infeasible at this field degree");
  std::uint64_t count = std::uint64_t(1) << target->degree();
  for (std::uint64_t v = 0; v < count; ++v) {
    FieldElement t = target->from_uint(v);
    if (poly_eval(p, t).is_zero()) return t;
  }
  throw std::logic_error("polynomial has no root in the requested field");
}

}  // namespace

FieldElement embed(const FieldElement& e, const FieldContextPtr& target) {
  require_context(e);
  unsigned m = element_degree(e);
  if (target->degree() % m != 0)
    throw std::invalid_argument("element degree does not divide target degree");
  if (e.context() == target) return e;
  if (e.is_zero()) return target->zero();
  return smallest_root(minimal_polynomial(e), target);
}

FieldElement minimal_model(const FieldElement& e) {
  return embed(e, FieldContext::get(element_degree(e)));
}

std::vector<FieldElement> degree_representatives(const FieldContextPtr& ctx, unsigned m,
                                                 bool orbits_only) {
  if (m == 0 || ctx->degree() % m != 0)
    throw std::invalid_argument("representative degree must divide the context degree");
  if (m > kScanLimit) throw std::domain_error("representative enumeration infeasible");
  std::size_t n = ctx->degree();

  // basis of the fixed field of frobenius^m: kernel of (x -> x^(2^m)) - id
  F2System sys(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Bits unit(ctx->words(), 0);
    set_bit(unit, j);
    FieldElement img = ctx->from_bits(unit).frobenius(m);
    for (std::size_t b = 0; b < n; ++b) sys.set(b, j, get_bit(img.bits(), b) ^ (b == j));
  }
  sys.rref();
  auto basis = sys.nullspace();
  if (basis.size() != m) throw std::logic_error("subfield dimension mismatch");

  std::vector<FieldElement> out;
  for (std::uint64_t v = 1; v < (std::uint64_t(1) << m); ++v) {
    Bits w(ctx->words(), 0);
    for (unsigned i = 0; i < m; ++i)
      if ((v >> i) & 1)
        for (std::size_t b = 0; b < n; ++b)
          if (basis[i][b]) w[b / 64] ^= std::uint64_t(1) << (b % 64);
    FieldElement e = ctx->from_bits(std::move(w));
    if (element_degree(e) != m) continue;
    if (orbits_only) {
      FieldElement minimal = e, cur = e;
      for (unsigned i = 1; i < m; ++i) {
        cur = cur.frobenius();
        if (cur < minimal) minimal = cur;
      }
      if (!(minimal == e)) continue;
    }
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end());
  return out;
}

ArtinSchreierRoot artin_schreier(const FieldElement& alpha) {
  require_context(alpha);
  if (alpha.is_zero()) throw std::invalid_argument("degenerate parameter alpha = 0");
  unsigned m = element_degree(alpha);
  FieldElement a0 = minimal_model(alpha);
  unsigned t = absolute_trace(a0);
  FieldContextPtr lam_ctx = FieldContext::get(t ? 2 * m : m);
  FieldElement a = t ? embed(a0, lam_ctx) : a0;

  // lambda^2 + lambda = a as a linear system over F_2
  std::size_t n = lam_ctx->degree();
  F2System sys(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Bits unit(lam_ctx->words(), 0);
    set_bit(unit, j);
    FieldElement u = lam_ctx->from_bits(unit);
    FieldElement img = u.frobenius() + u;
    for (std::size_t b = 0; b < n; ++b) sys.set(b, j, get_bit(img.bits(), b));
  }
  for (std::size_t b = 0; b < n; ++b) sys.set(b, n, get_bit(a.bits(), b));
  sys.rref();
  std::vector<bool> x;
  if (!sys.solve(x)) throw std::logic_error("Artin-Schreier system inconsistent");
  Bits lw(lam_ctx->words(), 0);
  for (std::size_t j = 0; j < n; ++j)
    if (x[j]) lw[j / 64] |= std::uint64_t(1) << (j % 64);
  FieldElement lambda = lam_ctx->from_bits(std::move(lw));

  unsigned m_lambda = element_degree(lambda);
  if (m_lambda != (t ? 2 * m : m)) throw std::logic_error("unexpected splitting degree");
  ScalarProfile profile{alpha, m, m_lambda, m_lambda == m};
  return ArtinSchreierRoot{std::move(profile), std::move(lambda), std::move(a)};
}

SubfieldProjection::SubfieldProjection(FieldContextPtr source, unsigned m)
    : source_(std::move(source)), target_(FieldContext::get(m)) {
  if (m == 0 || source_->degree() % m != 0)
    throw std::invalid_argument("subfield degree must divide the context degree");
  if (m > kScanLimit) throw std::domain_error("subfield projection infeasible at this degree");

  FieldElement gamma = source_->zero();
  if (m == source_->degree()) {
    gamma = source_->generator();
  } else {
    // any exact-degree-m element of the subfield will do; take the first in
    // the deterministic span enumeration
    std::size_t n = source_->degree();
    F2System sys(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      Bits unit(source_->words(), 0);
      set_bit(unit, j);
      FieldElement img = source_->from_bits(unit).frobenius(m);
      for (std::size_t b = 0; b < n; ++b) sys.set(b, j, get_bit(img.bits(), b) ^ (b == j));
    }
    sys.rref();
    auto basis = sys.nullspace();
    if (basis.size() != m) throw std::logic_error("subfield dimension mismatch");
    for (std::uint64_t v = 1; v < (std::uint64_t(1) << m); ++v) {
      Bits w(source_->words(), 0);
      for (unsigned i = 0; i < m; ++i)
        if ((v >> i) & 1)
          for (std::size_t b = 0; b < n; ++b)
            if (basis[i][b]) w[b / 64] ^= std::uint64_t(1) << (b % 64);
      FieldElement e = source_->from_bits(std::move(w));
      if (element_degree(e) == m) {
        gamma = std::move(e);
        break;
      }
    }
    if (gamma.is_zero()) throw std::logic_error("no exact-degree generator in subfield");
  }

  FieldElement rho = (source_ == target_) ? gamma : smallest_root(minimal_polynomial(gamma), target_);
  FieldElement gp = source_->one(), rp = target_->one();
  for (unsigned i = 0; i < m; ++i) {
    gamma_powers_.push_back(gp.bits());
    rho_powers_.push_back(rp);
    gp *= gamma;
    rp *= rho;
  }
}

FieldElement SubfieldProjection::apply(const FieldElement& e) const {
  require_context(e);
  if (e.context() != source_) throw std::invalid_argument("field context mismatch");
  std::size_t n = source_->degree();
  unsigned m = target_->degree();
  F2System sys(n, m);
  for (std::size_t b = 0; b < n; ++b) {
    for (unsigned i = 0; i < m; ++i) sys.set(b, i, get_bit(gamma_powers_[i], b));
    sys.set(b, m, get_bit(e.bits(), b));
  }
  sys.rref();
  std::vector<bool> c;
  if (!sys.solve(c)) throw std::domain_error("element lies outside the subfield");
  FieldElement out = target_->zero();
  for (unsigned i = 0; i < m; ++i)
    if (c[i]) out += rho_powers_[i];
  return out;
}

std::string to_string(const FieldElement& e) {
  require_context(e);
  std::ostringstream os;
  os << "gf2^" << e.context()->degree() << ":0x" << std::hex;
  const auto& w = e.bits();
  bool started = false;
  for (std::size_t i = w.size(); i-- > 0;) {
    if (!started) {
      if (w[i] == 0 && i != 0) continue;
      os << w[i];
      started = true;
    } else {
      os.width(16);
      os.fill('0');
      os << w[i];
    }
  }
  return os.str();
}

FieldElement parse_element(const std::string& s) {
  const std::string prefix = "gf2^";
  if (s.rfind(prefix, 0) != 0) throw std::invalid_argument("expected gf2^N:0x... literal");
  std::size_t colon = s.find(':', prefix.size());
  if (colon == std::string::npos) throw std::invalid_argument("expected ':' in field literal");
  unsigned degree = 0;
  {
    std::string d = s.substr(prefix.size(), colon - prefix.size());
    if (d.empty() || d.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad field degree in literal");
    degree = unsigned(std::stoul(d));
  }
  std::string hex = s.substr(colon + 1);
  if (hex.rfind("0x", 0) == 0 || hex.rfind("0X", 0) == 0) hex = hex.substr(2);
  if (hex.empty() || hex.find_first_not_of("0123456789abcdefABCDEF") != std::string::npos)
    throw std::invalid_argument("bad element bits in field literal");
  Bits w((hex.size() * 4 + 63) / 64, 0);
  for (std::size_t i = 0; i < hex.size(); ++i) {
    char c = hex[hex.size() - 1 - i];
    std::uint64_t v = (c <= '9') ? std::uint64_t(c - '0')
                                 : std::uint64_t((c | 0x20) - 'a' + 10);
    w[i / 16] |= v << (4 * (i % 16));
  }
  auto ctx = FieldContext::get(degree);
  if (bit_degree(w) >= int(degree)) throw std::invalid_argument("element bits exceed field degree");
  return ctx->from_bits(std::move(w));
}

}  // namespace hklab
