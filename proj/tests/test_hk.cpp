#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <numeric>
#include <vector>

#include "hklab/field.hpp"
#include "hklab/hk.hpp"
#include "hklab/poly.hpp"
#include "oracle_rank.hpp"

using namespace hklab;

namespace {

// one scalar per profile class reachable below degree 4
std::vector<FieldElement> small_scalars() {
  std::vector<FieldElement> out;
  out.push_back(FieldContext::get(1)->one());
  out.push_back(FieldContext::get(2)->generator());
  for (const FieldElement& a : degree_representatives(FieldContext::get(3), 3, true))
    out.push_back(a);
  return out;
}

}  // namespace

TEST_CASE("box grading bookkeeping") {
  BoxGrading grading(Box(2, 3), {1, 1, 1});
  CHECK(grading.total() == 64);
  CHECK(grading.max_degree() == 9);
  std::size_t covered = 0;
  for (unsigned d = 0; d <= grading.max_degree(); ++d) {
    for (MonoKey key : grading.bucket(d)) {
      CHECK(mono_degree(key, 3) == d);
      CHECK(grading.bucket(d)[grading.position(key)] == key);
    }
    covered += grading.bucket(d).size();
  }
  CHECK(covered == 64);
  CHECK(grading.bucket(0).size() == 1);
  CHECK(grading.bucket(99).empty());

  // all-zero weights: one bucket holding the whole box
  BoxGrading flat(Box(2, 3), {0, 0, 0});
  CHECK(flat.bucket(0).size() == 64);
  CHECK(flat.max_degree() == 0);
}

TEST_CASE("plane matrix elimination") {
  FieldContextPtr gf4 = FieldContext::get(2);

  PlaneMatrix id(gf4, 3, 3);
  for (std::size_t i = 0; i < 3; ++i) id.add_entry(i, i, 1);
  CHECK(id.entry(1, 1) == 1);
  CHECK(id.entry(0, 1) == 0);
  CHECK(id.rank() == 3);

  // [ w  1 ]      second row is w * first: rank 1
  // [ w2 w ]      (w2 = w*w)
  PlaneMatrix sing(gf4, 2, 2);
  sing.add_entry(0, 0, 0b10);
  sing.add_entry(0, 1, 1);
  sing.add_entry(1, 0, 0b11);  // w^2 = w + 1
  sing.add_entry(1, 1, 0b10);
  CHECK(sing.rank() == 1);

  // add_entry XORs: a doubled entry cancels
  PlaneMatrix z(gf4, 1, 1);
  z.add_entry(0, 0, 0b10);
  z.add_entry(0, 0, 0b10);
  CHECK(z.rank() == 0);
}

TEST_CASE("graded map shape") {
  FieldElement w = FieldContext::get(2)->generator();
  GradedMap map(quartic(w), Box(2, 3));
  CHECK(map.shift() == 4);
  for (const GradedBlock& blk : map.blocks()) {
    CHECK(blk.target_degree == blk.source_degree + 4);
    CHECK(blk.rows == map.grading().bucket(blk.target_degree).size());
    CHECK(blk.cols == map.grading().bucket(blk.source_degree).size());
  }
  CHECK(map.rank() == 20);  // 64 - 44
}

TEST_CASE("graded ranks equal naive ungraded elimination") {
  for (const FieldElement& alpha : small_scalars()) {
    MultiPoly g = quartic(alpha);
    for (unsigned n = 1; n <= 2; ++n)
      CHECK(hk_number(g, n) == oracle::hk_value(g, n));
    MultiPoly G = smoothed_surface(alpha);
    CHECK(hk_number(G, 1) == oracle::hk_value(G, 1));
  }

  // an inhomogeneous operator exercises the single-bucket fallback
  FieldContextPtr gf4 = FieldContext::get(2);
  MultiPoly f(gf4, 3);
  f.add_term({3, 0, 0}, gf4->one());
  f.add_term({0, 1, 0}, gf4->generator());
  f.add_term({0, 0, 2}, gf4->one());
  for (unsigned n = 1; n <= 2; ++n)
    CHECK(hk_number(f, n) == oracle::hk_value(f, n));
}

TEST_CASE("box quotient values of the family") {
  for (const FieldElement& alpha : small_scalars()) {
    CAPTURE(to_string(alpha));
    CHECK(hk_number(quartic(alpha), 1) == 8);
    CHECK(hk_number(quartic(alpha), 2) == 44);
    CHECK(hk_number(smoothed_surface(alpha), 1) == 24);
  }
}

TEST_CASE("degenerate operators") {
  FieldContextPtr gf4 = FieldContext::get(2);
  CHECK(hk_number(MultiPoly(gf4, 3), 2) == 64);          // zero: full quotient
  CHECK(hk_number(one_poly(gf4, 3), 2) == 0);            // unit: zero ring
  MultiPoly c(gf4, 3);
  c.add_term({0, 0, 0}, gf4->generator());
  CHECK(hk_number(c, 2) == 0);                           // any nonzero constant
  CHECK(hk_number(quartic(gf4->generator()), 0) == 1);   // level-0 box
}

TEST_CASE("power plateau") {
  FieldElement w = FieldContext::get(2)->generator();
  MultiPoly g = quartic(w);
  for (std::uint64_t j = 2; j <= 4; ++j)
    CHECK(hk_number(power_mod_box(g, j, Box(2, 3)), 2) == 64);
  for (std::uint64_t j : {4, 5, 8})
    CHECK(hk_number(power_mod_box(g, std::uint64_t(j), Box(3, 3)), 3) == 512);
}

TEST_CASE("power sequences") {
  FieldElement one = FieldContext::get(1)->one();
  FieldElement w = FieldContext::get(2)->generator();

  auto seq = hk_power_sequence(w, 2, 4, false);
  CHECK(seq == std::vector<std::uint64_t>{0, 44, 64, 64, 64});
  CHECK(hk_power_sequence(one, 1, 2, false) == std::vector<std::uint64_t>{0, 8, 8});

  // shortcut mode is an identity, not an approximation
  for (const FieldElement& alpha : small_scalars())
    for (unsigned n = 1; n <= 3; ++n) {
      std::uint64_t jmax = std::uint64_t(1) << n;
      CHECK(hk_power_sequence(alpha, n, jmax, true) ==
            hk_power_sequence(alpha, n, jmax, false));
    }
}

TEST_CASE("level identities on fresh ranks") {
  for (const FieldElement& alpha : small_scalars()) {
    CAPTURE(to_string(alpha));
    auto e2 = hk_power_sequence(alpha, 2, 4, false);
    auto e3 = hk_power_sequence(alpha, 3, 8, false);

    // doubling: one level up, even powers scale by the box factor 8
    for (std::uint64_t j = 1; j <= 4; ++j) CHECK(e3[2 * j] == 8 * e2[j]);

    // upper-half powers interpolate linearly between even neighbours
    for (std::uint64_t j = 2; j <= 3; ++j) CHECK(2 * e3[2 * j + 1] == e3[2 * j] + e3[2 * j + 2]);
  }
}

TEST_CASE("values are constant along Frobenius orbits") {
  FieldContextPtr gf8 = FieldContext::get(3);
  for (const FieldElement& alpha : degree_representatives(gf8, 3, true)) {
    FieldElement conj = alpha.frobenius();
    Box box(3, 3);
    MultiPoly p = power_mod_box(quartic(alpha), 3, box);
    MultiPoly q = power_mod_box(quartic(conj), 3, box);
    CHECK(hk_number(p, 3) == hk_number(q, 3));
  }
}

TEST_CASE("smoothed surface values") {
  FieldElement one = FieldContext::get(1)->one();
  FieldElement w = FieldContext::get(2)->generator();
  auto deg3 = degree_representatives(FieldContext::get(3), 3, true);

  for (const FieldElement& alpha : {one, w, deg3[0], deg3[1]}) {
    CAPTURE(to_string(alpha));
    CHECK(hk_smoothed(alpha, 1, SmoothedMode::direct) == 24);
    CHECK(hk_smoothed(alpha, 1, SmoothedMode::lemma_sum) == 24);
    CHECK(hk_smoothed(alpha, 2, SmoothedMode::direct) == 408);
    CHECK(hk_smoothed(alpha, 2, SmoothedMode::lemma_sum) == 408);
  }

  CHECK(hk_smoothed(one, 3, SmoothedMode::lemma_sum) == 6592);
  CHECK(hk_smoothed(w, 3, SmoothedMode::lemma_sum) == 6592);
  CHECK(hk_smoothed(deg3[0], 3, SmoothedMode::lemma_sum) == 6576);
  CHECK(hk_smoothed(deg3[1], 3, SmoothedMode::lemma_sum) == 6576);
  CHECK(hk_smoothed(w, 4, SmoothedMode::lemma_sum) == 105568);

  CHECK_THROWS_AS(hk_smoothed(w, 3, SmoothedMode::direct), std::domain_error);
  CHECK(hk_smoothed(w, 3, SmoothedMode::direct, 0, 3) == 6592);  // raised ceiling
}

TEST_CASE("worker count does not change results") {
  FieldElement w = FieldContext::get(2)->generator();
  MultiPoly g = quartic(w);
  std::uint64_t base = hk_number(g, 3, 1);
  for (unsigned workers : {2u, 3u, 8u}) CHECK(hk_number(g, 3, workers) == base);
  CHECK(hk_smoothed(w, 3, SmoothedMode::lemma_sum, 1) ==
        hk_smoothed(w, 3, SmoothedMode::lemma_sum, 7));
}
