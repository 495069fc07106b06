#include "hklab/hk.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "hklab/parallel.hpp"

namespace hklab {

namespace {

// Elimination keeps whole blocks in memory; past this the lab is the wrong
// tool anyway.
constexpr std::uint64_t kMaxBoxVolume = std::uint64_t(1) << 21;

std::vector<unsigned> choose_weights(const MultiPoly& f, unsigned nvars) {
  std::vector<unsigned> w;
  try {
    w = standard_weights(nvars);
  } catch (const std::invalid_argument&) {
    w.assign(nvars, 0);
  }
  if (!homogeneous_degree(f, w)) w.assign(nvars, 0);
  return w;
}

}  // namespace

BoxGrading::BoxGrading(const Box& box, std::vector<unsigned> weights)
    : box_(box), weights_(std::move(weights)) {
  if (weights_.size() != box_.nvars) throw std::invalid_argument("weight count mismatch");
  total_ = box_.volume();
  if (total_ > kMaxBoxVolume) throw std::domain_error("box volume exceeds the supported size");
  const unsigned q = unsigned(box_.side());
  unsigned maxdeg = 0;
  for (unsigned v = 0; v < box_.nvars; ++v) maxdeg += weights_[v] * (q - 1);
  buckets_.resize(maxdeg + 1);
  pos_.assign(total_, 0);

  // odometer with the last variable fastest, so keys are emitted ascending
  std::vector<unsigned> exps(box_.nvars, 0);
  for (;;) {
    unsigned d = 0;
    for (unsigned v = 0; v < box_.nvars; ++v) d += weights_[v] * exps[v];
    MonoKey key = mono_pack(exps, box_.nvars);
    auto& bucket = buckets_[d];
    pos_[tight_index(exps.data())] = std::uint32_t(bucket.size());
    bucket.push_back(key);
    unsigned v = box_.nvars;
    while (v-- > 0) {
      if (++exps[v] < q) break;
      exps[v] = 0;
      if (v == 0) return;
    }
  }
}

std::uint64_t BoxGrading::tight_index(const unsigned* exps) const {
  std::uint64_t idx = 0;
  for (unsigned v = 0; v < box_.nvars; ++v) idx |= std::uint64_t(exps[v]) << (v * box_.n);
  return idx;
}

const std::vector<MonoKey>& BoxGrading::bucket(unsigned degree) const {
  static const std::vector<MonoKey> empty;
  return degree < buckets_.size() ? buckets_[degree] : empty;
}

std::uint32_t BoxGrading::position(MonoKey key) const {
  auto exps = mono_unpack(key, box_.nvars);
  if (!box_.contains(key)) throw std::out_of_range("monomial outside the box");
  return pos_[tight_index(exps.data())];
}

std::uint32_t BoxGrading::position_by_exponents(const unsigned* exps) const {
  return pos_[tight_index(exps)];
}

GradedMap::GradedMap(MultiPoly f, const Box& box)
    : f_(truncate_to_box(f, box)),
      grading_(box, choose_weights(f_, f.nvars())),
      shift_(homogeneous_degree(f_, grading_.weights()).value()) {
  if (f_.is_zero()) return;  // rank 0, no blocks
  for (unsigned d = 0; d + shift_ <= grading_.max_degree(); ++d) {
    std::size_t cols = grading_.bucket(d).size();
    std::size_t rows = grading_.bucket(d + shift_).size();
    if (cols && rows) blocks_.push_back({d, d + shift_, rows, cols});
  }
}

PlaneMatrix GradedMap::build_block(std::size_t index) const {
  const GradedBlock& blk = blocks_.at(index);
  PlaneMatrix m(f_.context(), blk.rows, blk.cols);
  const auto& source = grading_.bucket(blk.source_degree);
  const unsigned nvars = f_.nvars();
  const unsigned q = unsigned(grading_.box().side());

  std::vector<std::pair<std::vector<unsigned>, std::uint64_t>> terms;
  terms.reserve(f_.term_count());
  for (const auto& [k, c] : f_.terms()) terms.emplace_back(mono_unpack(k, nvars), c.word0());

  std::vector<unsigned> mu(nvars), sum(nvars);
  for (std::size_t cs = 0; cs < source.size(); ++cs) {
    for (unsigned v = 0; v < nvars; ++v) mu[v] = unsigned(source[cs] >> (8 * (nvars - 1 - v))) & 0xff;
    for (const auto& [nu, bits] : terms) {
      bool inside = true;
      for (unsigned v = 0; v < nvars; ++v) {
        sum[v] = mu[v] + nu[v];
        if (sum[v] >= q) {
          inside = false;
          break;
        }
      }
      if (inside) m.add_entry(grading_.position_by_exponents(sum.data()), cs, bits);
    }
  }
  return m;
}

std::uint64_t GradedMap::rank(unsigned workers) const {
  if (blocks_.empty()) return 0;
  std::vector<std::size_t> order(blocks_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return blocks_[a].rows * blocks_[a].cols > blocks_[b].rows * blocks_[b].cols;
  });
  std::vector<std::uint64_t> ranks(blocks_.size(), 0);
  parallel_for(order.size(), workers,
               [&](std::size_t i) { ranks[order[i]] = build_block(order[i]).rank(); });
  std::uint64_t total = 0;
  for (auto r : ranks) total += r;
  return total;
}

std::uint64_t hk_number(const MultiPoly& f, unsigned n, unsigned workers) {
  Box box(n, f.nvars());
  std::uint64_t vol = box.volume();
  if (vol > kMaxBoxVolume) throw std::domain_error("box volume exceeds the supported size");
  MultiPoly ft = truncate_to_box(f, box);
  if (ft.is_zero()) return vol;
  if (ft.term_count() == 1 && ft.terms().begin()->first == 0) return 0;  // unit
  GradedMap map(compress_coefficients(ft), box);
  return vol - map.rank(workers);
}

std::vector<std::uint64_t> hk_power_sequence(const FieldElement& alpha, unsigned n,
                                             std::uint64_t jmax, bool use_shortcuts,
                                             unsigned workers) {
  MultiPoly g = quartic(minimal_model(alpha));
  if (!use_shortcuts) {
    std::vector<std::uint64_t> e(jmax + 1, 0);
    Box box(n, 3);
    for (std::uint64_t j = 1; j <= jmax; ++j)
      e[j] = hk_number(power_mod_box(g, j, box), n, workers);
    return e;
  }
  // Climb the levels: even powers above level 1 satisfy
  // e_l(g^(2j)) = 8 e_(l-1)(g^j), so only odd powers are eliminated.
  std::vector<std::uint64_t> below, cur;
  for (unsigned level = 0; level <= n; ++level) {
    std::uint64_t jm = (n - level >= 64) ? 0 : (jmax >> (n - level));
    cur.assign(jm + 1, 0);
    Box box(level, 3);
    for (std::uint64_t j = 1; j <= jm; ++j) {
      if (level >= 2 && j % 2 == 0)
        cur[j] = 8 * below[j / 2];
      else
        cur[j] = hk_number(power_mod_box(g, j, box), level, workers);
    }
    below = cur;
  }
  return cur;
}

std::uint64_t hk_smoothed(const FieldElement& alpha, unsigned n, SmoothedMode mode,
                          unsigned workers, unsigned direct_ceiling, bool use_shortcuts) {
  if (mode == SmoothedMode::direct) {
    if (n > direct_ceiling)
      throw std::domain_error("direct five-variable elimination is capped; raise direct_ceiling");
    return hk_number(smoothed_surface(minimal_model(alpha)), n, workers);
  }
  if (n > 20) throw std::domain_error("smoothed level out of range");
  auto seq = hk_power_sequence(alpha, n, std::uint64_t(1) << n, use_shortcuts, workers);
  std::uint64_t s = 0;
  for (std::uint64_t j = 1; j < (std::uint64_t(1) << n); ++j) s += seq[j];
  return 2 * s + seq[std::size_t(1) << n];
}

}  // namespace hklab
