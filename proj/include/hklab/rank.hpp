#pragma once

#include <cstdint>
#include <vector>

#include "hklab/field.hpp"

namespace hklab {

/// Dense matrix over GF(2^m) stored as m parallel GF(2) bit planes: plane k
/// holds the k-th coordinate bit of every entry.  Row operations become word
/// XORs on all planes at once, and scaling by a field scalar is a linear
/// recombination of the planes through the modulus, so elimination never
/// multiplies individual entries.  Requires the context degree to be <= 63;
/// wider coefficient fields are expected to be projected onto the subfield
/// actually spanned by the data before reaching this kernel.
class PlaneMatrix {
public:
  PlaneMatrix(FieldContextPtr ctx, std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldContextPtr& context() const { return ctx_; }

  /// XORs the coefficient bits into the entry.
  void add_entry(std::size_t r, std::size_t c, std::uint64_t coeff_bits);
  std::uint64_t entry(std::size_t r, std::size_t c) const;

  /// Row-echelon rank; destroys the contents.
  std::size_t rank();

private:
  std::uint64_t* plane(std::size_t r, unsigned k) { return data_.data() + (r * m_ + k) * words_; }
  const std::uint64_t* plane(std::size_t r, unsigned k) const {
    return data_.data() + (r * m_ + k) * words_;
  }

  FieldContextPtr ctx_;
  unsigned m_ = 0;
  std::size_t rows_ = 0, cols_ = 0, words_ = 0;
  std::vector<std::uint64_t> data_;
};

}  // namespace hklab
