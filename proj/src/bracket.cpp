#include "hklab/bracket.hpp"

#include <stdexcept>

namespace hklab {

namespace {

// keeps (3a+5b+d)*2^c and the 2^n path counts inside uint64
constexpr unsigned kMaxLevel = 58;

void check_params(const SigmaParams& p) {
  if (p.m_alpha == 0) throw std::invalid_argument("m_alpha must be >= 1");
  if (p.m_alpha == 1 && p.case_equal)
    throw std::invalid_argument("degree-1 scalars always split in the unequal case");
}

void check_level(unsigned n) {
  if (n > kMaxLevel) throw std::domain_error("bracket level out of the 64-bit range");
}

bool parity_hit(unsigned index, int bit, const SigmaParams& p) {
  if (index % p.m_alpha != 0) return false;
  bool quot_even = (index / p.m_alpha) % 2 == 0;
  bool wants_even = p.case_equal ? (bit == 1) : (bit == 0);
  return quot_even == wants_even;
}

std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

GroupVector initial_state() { return GroupVector{0, 0, 0, 2, 1}; }

GroupVector apply_sigma(const GroupVector& s, int bit, const SigmaParams& p) {
  check_params(p);
  if (bit != 0 && bit != 1) throw std::invalid_argument("bit must be 0 or 1");
  GroupVector out{s.level + 1, 0, 0, s.c, 0};
  if (s.a) {
    if (parity_hit(s.level + 1, bit, p))
      out.b += s.a;
    else
      out.a += s.a;
  }
  if (s.b) {
    if (!parity_hit(s.level, bit, p)) {
      out.a += s.b;
      out.c += s.b;
    }
  }
  if (s.d && bit == 0) out.a += s.d;  // D seeds A_1
  return out;
}

GroupVector state(unsigned n, std::uint64_t j, const SigmaParams& p) {
  check_params(p);
  if (n < 64 && (j >> n) != 0) throw std::invalid_argument("path index j must satisfy j < 2^n");
  GroupVector s = initial_state();
  for (unsigned i = n; i-- > 0;) s = apply_sigma(s, int((j >> i) & 1), p);
  return s;
}

std::uint64_t bracket_value(const GroupVector& s) {
  std::int64_t base = 3 * s.a + 5 * s.b + s.d;
  if (base < 0 || s.c < 0 || s.c > 60) throw std::domain_error("bracket value out of range");
  return std::uint64_t(base) << s.c;
}

std::uint64_t bracket_value(unsigned n, std::uint64_t j, const SigmaParams& p) {
  check_level(n);
  return bracket_value(state(n, j, p));
}

SymbolDistribution level_distribution(unsigned n, const SigmaParams& p) {
  check_params(p);
  if (n > 62) throw std::domain_error("path counts exceed the 64-bit range");
  std::map<std::array<std::int64_t, 4>, std::uint64_t> cur;
  {
    GroupVector s = initial_state();
    cur[{s.a, s.b, s.c, s.d}] = 1;
  }
  for (unsigned level = 0; level < n; ++level) {
    std::map<std::array<std::int64_t, 4>, std::uint64_t> next;
    for (const auto& [key, cnt] : cur) {
      GroupVector s{level, key[0], key[1], key[2], key[3]};
      for (int bit = 0; bit < 2; ++bit) {
        GroupVector t = apply_sigma(s, bit, p);
        next[{t.a, t.b, t.c, t.d}] += cnt;
      }
    }
    cur.swap(next);
  }
  return SymbolDistribution{n, std::move(cur)};
}

std::pair<std::uint64_t, std::uint64_t> count_ab(unsigned n, std::int64_t t,
                                                 const SigmaParams& p) {
  SymbolDistribution dist = level_distribution(n, p);
  std::uint64_t a = 0, b = 0;
  if (auto it = dist.counts.find({1, 0, t, 0}); it != dist.counts.end()) a = it->second;
  if (auto it = dist.counts.find({0, 1, t, 0}); it != dist.counts.end()) b = it->second;
  return {a, b};
}

std::uint64_t bracket_sum(unsigned n, const SigmaParams& p) {
  check_level(n);
  SymbolDistribution dist = level_distribution(n, p);
  std::uint64_t total = 0;
  for (const auto& [key, cnt] : dist.counts) {
    GroupVector s{n, key[0], key[1], key[2], key[3]};
    total += cnt * bracket_value(s);
  }
  return total;
}

std::uint64_t closed_form_count(unsigned n, unsigned t, unsigned m_alpha) {
  if (m_alpha == 0) throw std::invalid_argument("m_alpha must be >= 1");
  check_level(n);
  if (n == 0 || t < 2) return 0;
  if (m_alpha == 1) {
    if (n + 1 < t || n + 1 - t < t - 2) return 0;
    return binomial(n + 1 - t, t - 2);
  }
  unsigned r = (n + m_alpha - 1) / m_alpha;
  unsigned i = n - m_alpha * (r - 1);
  if (t > r + 1) return 0;
  unsigned exp = (i == m_alpha) ? (m_alpha - 1) * r + 1 - t
                                : (m_alpha - 1) * r + i + 2 - t - m_alpha;
  return (std::uint64_t(1) << exp) * binomial(r - 1, t - 2);
}

}  // namespace hklab
