#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hklab/field.hpp"

namespace hklab {

/// Monomials are packed into one 64-bit key, 8 bits per exponent, variable 0
/// in the highest used byte so that key order = lexicographic order.  This
/// caps supported polynomials at 8 variables and exponents below 256, which
/// covers every box handled here (side 2^n with n <= 8).
using MonoKey = std::uint64_t;

constexpr unsigned kMaxVars = 8;
constexpr unsigned kMaxExponent = 255;

MonoKey mono_pack(const std::vector<unsigned>& exps, unsigned nvars);
std::vector<unsigned> mono_unpack(MonoKey key, unsigned nvars);
unsigned mono_degree(MonoKey key, unsigned nvars);
unsigned mono_weighted_degree(MonoKey key, const std::vector<unsigned>& weights);

/// The exponent box [0, 2^n)^nvars.
struct Box {
  unsigned n = 0;
  unsigned nvars = 0;

  Box(unsigned n_, unsigned nvars_);
  std::uint64_t side() const { return std::uint64_t(1) << n; }
  std::uint64_t volume() const;
  bool contains(MonoKey key) const;
};

/// Sparse multivariate polynomial over one field context.  Terms are kept
/// normalized (no zero coefficients) and sorted by monomial key.
class MultiPoly {
public:
  MultiPoly() = default;
  MultiPoly(FieldContextPtr ctx, unsigned nvars);

  const FieldContextPtr& context() const { return ctx_; }
  unsigned nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<MonoKey, FieldElement>& terms() const { return terms_; }

  FieldElement coeff(MonoKey key) const;
  void add_term(MonoKey key, const FieldElement& c);
  void add_term(const std::vector<unsigned>& exps, const FieldElement& c);

  MultiPoly operator+(const MultiPoly& o) const;
  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

private:
  FieldContextPtr ctx_;
  unsigned nvars_ = 0;
  std::map<MonoKey, FieldElement> terms_;
};

MultiPoly one_poly(const FieldContextPtr& ctx, unsigned nvars);

/// Product, optionally truncated to a box (terms straying outside are
/// dropped, which is exactly reduction modulo the box's Frobenius-power
/// ideal).  Without a box, exponent overflow past 255 throws.
MultiPoly multiply(const MultiPoly& a, const MultiPoly& b,
                   const std::optional<Box>& box = std::nullopt);

/// Characteristic-2 square: coefficients square, exponents double.
MultiPoly square(const MultiPoly& a, const std::optional<Box>& box = std::nullopt);

MultiPoly truncate_to_box(const MultiPoly& p, const Box& box);

/// p^j reduced into the box at every step (binary powering; squarings use the
/// characteristic-2 shortcut).  j = 0 gives 1.
MultiPoly power_mod_box(const MultiPoly& p, std::uint64_t j, const Box& box);

/// alpha*x^2*y^2 + z^4 + x*y*z^2 + x^3*z + y^3*z in variables x, y, z.
MultiPoly quartic(const FieldElement& alpha);

/// u*v + quartic(alpha) in variables x, y, z, u, v.
MultiPoly smoothed_surface(const FieldElement& alpha);

/// Weights that grade the family's coordinate rings: (1,1,1) for 3 variables
/// and (1,1,1,2,2) for 5.
std::vector<unsigned> standard_weights(unsigned nvars);

/// Common weighted degree of all terms, or nullopt if mixed; 0 for the zero
/// polynomial.
std::optional<unsigned> homogeneous_degree(const MultiPoly& p, const std::vector<unsigned>& weights);

/// p rewritten over the smallest subfield containing all its coefficients
/// (GF(2^m) for m the lcm of their degrees); p itself when already minimal.
MultiPoly compress_coefficients(const MultiPoly& p);

/// "gf2^2[x,y,z]: x^3*z + 0x2*x^2*y^2 + x*y*z^2 + y^3*z + z^4" -- terms in
/// graded-lex descending order, unit coefficients omitted.
std::string to_string(const MultiPoly& p);
MultiPoly parse_poly(const std::string& s);

}  // namespace hklab
