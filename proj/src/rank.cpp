#include "hklab/rank.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace hklab {

PlaneMatrix::PlaneMatrix(FieldContextPtr ctx, std::size_t rows, std::size_t cols)
    : ctx_(std::move(ctx)), rows_(rows), cols_(cols) {
  if (!ctx_) throw std::invalid_argument("plane matrix needs a field context");
  if (ctx_->degree() > 63)
    throw std::domain_error("plane-matrix kernel supports coefficient fields up to GF(2^63)");
  m_ = ctx_->degree();
  words_ = (cols_ + 63) / 64;
  data_.assign(rows_ * m_ * words_, 0);
}

void PlaneMatrix::add_entry(std::size_t r, std::size_t c, std::uint64_t coeff_bits) {
  const std::uint64_t mask = std::uint64_t(1) << (c % 64);
  const std::size_t w = c / 64;
  for (unsigned k = 0; k < m_; ++k)
    if ((coeff_bits >> k) & 1) plane(r, k)[w] ^= mask;
}

std::uint64_t PlaneMatrix::entry(std::size_t r, std::size_t c) const {
  const std::size_t w = c / 64;
  const unsigned b = unsigned(c % 64);
  std::uint64_t v = 0;
  for (unsigned k = 0; k < m_; ++k) v |= ((plane(r, k)[w] >> b) & 1) << k;
  return v;
}

std::size_t PlaneMatrix::rank() {
  if (rows_ == 0 || cols_ == 0) return 0;
  const std::uint64_t mod = ctx_->modulus()[0];
  const std::size_t rw = m_ * words_;  // words per row
  auto row_ptr = [&](std::size_t r) { return data_.data() + r * rw; };

  // xp[i] = x^i * (pivot row); c * row for any scalar c is then the XOR of
  // the xp[i] with bit i of c set.
  std::vector<std::uint64_t> xp(m_ * rw);
  auto build_xp = [&](const std::uint64_t* src) {
    std::copy(src, src + rw, xp.data());
    for (unsigned i = 1; i < m_; ++i) {
      const std::uint64_t* prev = xp.data() + (i - 1) * rw;
      std::uint64_t* cur = xp.data() + i * rw;
      const std::uint64_t* top = prev + (m_ - 1) * words_;
      for (unsigned k = m_; k-- > 1;) {
        std::uint64_t* dst = cur + k * words_;
        const std::uint64_t* lower = prev + (k - 1) * words_;
        if ((mod >> k) & 1)
          for (std::size_t w = 0; w < words_; ++w) dst[w] = lower[w] ^ top[w];
        else
          std::copy(lower, lower + words_, dst);
      }
      std::copy(top, top + words_, cur);  // constant term of the modulus is 1
    }
  };

  std::vector<std::uint64_t> table;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t p = SIZE_MAX;
    for (std::size_t r = rank; r < rows_; ++r)
      if (entry(r, col)) {
        p = r;
        break;
      }
    if (p == SIZE_MAX) continue;
    if (p != rank) std::swap_ranges(row_ptr(p), row_ptr(p) + rw, row_ptr(rank));

    std::uint64_t v = entry(rank, col);
    build_xp(row_ptr(rank));
    if (v != 1) {
      std::uint64_t s = ctx_->inv_word(v);
      std::uint64_t* dst = row_ptr(rank);
      std::fill(dst, dst + rw, 0);
      while (s) {
        unsigned k = unsigned(std::countr_zero(s));
        s &= s - 1;
        const std::uint64_t* src = xp.data() + k * rw;
        for (std::size_t w = 0; w < rw; ++w) dst[w] ^= src[w];
      }
      build_xp(dst);
    }

    const bool use_table = m_ <= 12 && (std::uint64_t(1) << m_) <= 4 * (rows_ - rank);
    if (use_table) {
      table.resize((std::size_t(1) << m_) * rw);
      std::fill(table.begin(), table.begin() + std::ptrdiff_t(rw), 0);
      for (std::uint64_t c = 1; c < (std::uint64_t(1) << m_); ++c) {
        std::uint64_t low = c & (~c + 1);
        const std::uint64_t* base = table.data() + (c ^ low) * rw;
        const std::uint64_t* add = xp.data() + std::size_t(std::countr_zero(low)) * rw;
        std::uint64_t* dst = table.data() + c * rw;
        for (std::size_t w = 0; w < rw; ++w) dst[w] = base[w] ^ add[w];
      }
    }

    for (std::size_t r = rank + 1; r < rows_; ++r) {
      std::uint64_t c = entry(r, col);
      if (!c) continue;
      std::uint64_t* dst = row_ptr(r);
      if (use_table) {
        const std::uint64_t* src = table.data() + c * rw;
        for (std::size_t w = 0; w < rw; ++w) dst[w] ^= src[w];
      } else {
        while (c) {
          unsigned k = unsigned(std::countr_zero(c));
          c &= c - 1;
          const std::uint64_t* src = xp.data() + k * rw;
          for (std::size_t w = 0; w < rw; ++w) dst[w] ^= src[w];
        }
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace hklab
