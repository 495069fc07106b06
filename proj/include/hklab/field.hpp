#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace hklab {

class FieldContext;
using FieldContextPtr = std::shared_ptr<const FieldContext>;
class FieldElement;

/// Arithmetic context for GF(2^N) in polynomial basis: elements are bit
/// vectors (bit i = coefficient of x^i) reduced modulo a fixed irreducible
/// modulus over F_2.  The canonical modulus for each degree is the
/// lexicographically smallest irreducible polynomial (compared as the integer
/// whose binary digits are the coefficients), so contexts are reproducible
/// across runs and machines without lookup tables.
class FieldContext : public std::enable_shared_from_this<FieldContext> {
public:
  /// Canonical context for GF(2^degree); memoized, so repeated calls share
  /// one object.  degree >= 1.
  static FieldContextPtr get(unsigned degree);

  unsigned degree() const { return degree_; }
  /// Words per element (64-bit words, little-endian bit order).
  std::size_t words() const { return words_; }
  /// Modulus bits, one extra bit beyond the element width (the x^N term).
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }
  std::string modulus_string() const;  // "x^4 + x + 1"

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement generator() const;  // the class of x
  /// Element from its low 64 coefficient bits; requires bits < 2^degree.
  FieldElement from_uint(std::uint64_t bits) const;
  FieldElement from_bits(std::vector<std::uint64_t> bits) const;

  // Raw word-span arithmetic.  Spans are words() long; out may alias inputs.
  void add(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* out) const;
  void mul(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* out) const;
  void sqr(const std::uint64_t* a, std::uint64_t* out) const;
  void inv(const std::uint64_t* a, std::uint64_t* out) const;  // throws on zero

  // Single-word fast path; requires degree() <= 63.
  std::uint64_t mul_word(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t inv_word(std::uint64_t a) const;

private:
  explicit FieldContext(unsigned degree);
  void reduce(std::uint64_t* acc) const;  // acc has 2*words() words

  unsigned degree_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> modulus_;
};

class FieldElement {
public:
  FieldElement() = default;  // detached null element; unusable in arithmetic

  const FieldContextPtr& context() const { return ctx_; }
  const std::vector<std::uint64_t>& bits() const { return w_; }
  std::uint64_t word0() const { return w_.empty() ? 0 : w_[0]; }
  /// Bit pattern as an integer; requires the context degree to be <= 64.
  std::uint64_t to_uint() const;

  bool is_zero() const;
  bool is_one() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }
  /// Bit-pattern order within one context (the order used for canonical
  /// representatives and deterministic listings).
  bool operator<(const FieldElement& o) const;

  FieldElement inverse() const;
  FieldElement pow(std::uint64_t k) const;
  FieldElement frobenius(unsigned k = 1) const;  // e -> e^(2^k)

private:
  friend class FieldContext;
  FieldElement(FieldContextPtr ctx, std::vector<std::uint64_t> w)
      : ctx_(std::move(ctx)), w_(std::move(w)) {}

  FieldContextPtr ctx_;
  std::vector<std::uint64_t> w_;
};

/// Degree of F_2(e) over F_2, i.e. the least m with e^(2^m) = e.  Both 0 and
/// 1 have degree 1.  Always divides the context degree.
unsigned element_degree(const FieldElement& e);

/// Trace of e to F_2 from its own subfield F_2(e) (not from the ambient
/// context): sum of e^(2^i) for i < element_degree(e).  Returns 0 or 1.
unsigned absolute_trace(const FieldElement& e);

/// Minimal polynomial of e over F_2 as modulus-style bits (degree
/// element_degree(e), monic).
std::vector<std::uint64_t> minimal_polynomial(const FieldElement& e);

/// Image of e in `target` under the canonical embedding.  If e already lives
/// in `target` it is returned unchanged; otherwise it maps to the
/// lexicographically smallest root of its minimal polynomial there, so
/// conjugate inputs from a foreign context share one image.  Requires
/// element_degree(e) to divide target->degree().
FieldElement embed(const FieldElement& e, const FieldContextPtr& target);

/// Canonical copy of e in the minimal context GF(2^element_degree(e)).
FieldElement minimal_model(const FieldElement& e);

/// Nonzero elements of exact degree m in ctx (requires m | ctx->degree()),
/// sorted by bit pattern.  With orbits_only, one canonical representative per
/// Frobenius orbit (the conjugate with the smallest bit pattern).
std::vector<FieldElement> degree_representatives(const FieldContextPtr& ctx,
                                                 unsigned m, bool orbits_only);

struct ScalarProfile {
  FieldElement alpha;
  unsigned m_alpha = 0;
  unsigned m_lambda = 0;
  bool case_equal = false;  // m_lambda == m_alpha
};

/// Root data for y^2 + y = alpha.  `lambda` lives in GF(2^m_alpha) when the
/// absolute trace of alpha vanishes and in GF(2^(2*m_alpha)) otherwise;
/// `alpha_lifted` is alpha's canonical image in lambda's context, and
/// lambda^2 + lambda = alpha_lifted holds exactly.
struct ArtinSchreierRoot {
  ScalarProfile profile;
  FieldElement lambda;
  FieldElement alpha_lifted;
};

/// Solves y^2 + y = alpha over the algebraic closure of F_2.  alpha must be
/// nonzero (the degenerate parameter is rejected).
ArtinSchreierRoot artin_schreier(const FieldElement& alpha);

/// F_2-algebra isomorphism from the degree-m subfield of a context onto the
/// canonical GF(2^m).  apply() throws std::domain_error off the subfield.
class SubfieldProjection {
public:
  SubfieldProjection(FieldContextPtr source, unsigned m);
  const FieldContextPtr& source() const { return source_; }
  const FieldContextPtr& target() const { return target_; }
  FieldElement apply(const FieldElement& e) const;

private:
  FieldContextPtr source_;
  FieldContextPtr target_;
  // coordinates: solve gamma_powers * c = e, then map to sum c_i rho^i
  std::vector<std::vector<std::uint64_t>> gamma_powers_;  // column bit vectors
  std::vector<FieldElement> rho_powers_;
};

/// "gf2^N:0x2b" (lowercase hex, no leading zeros).
std::string to_string(const FieldElement& e);
/// Inverse of to_string; builds (or reuses) the canonical context.
FieldElement parse_element(const std::string& s);

}  // namespace hklab
