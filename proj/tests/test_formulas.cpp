#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "hklab/bracket.hpp"
#include "hklab/formulas.hpp"

using namespace hklab;

namespace {

BigInt pow2b(unsigned k) { return BigInt(1) << k; }

// e_0 = 1, e_(v+1) = 16 e_v + 2 d_v: the level recurrence for the
// five-variable surface, unrolled far past the closed form's validity.
std::vector<BigInt> surface_series(unsigned m, unsigned levels) {
  std::vector<BigInt> e{1};
  for (unsigned v = 0; v < levels; ++v)
    e.push_back(16 * e.back() + 2 * BigInt(m == 1 ? c_seq(v) : d_seq(v, m)));
  return e;
}

}  // namespace

TEST_CASE("level sum sequences") {
  CHECK(d_seq(0, 2) == 4);
  CHECK(d_seq(0, 7) == 4);
  CHECK(d_seq(1, 2) == 12);
  CHECK(d_seq(2, 2) == 32);
  CHECK(d_seq(3, 2) == 48);
  CHECK(d_seq(4, 2) == 128);
  CHECK(d_seq(1, 3) == 12);
  CHECK(d_seq(2, 3) == 24);
  CHECK(d_seq(3, 3) == 64);
  CHECK(d_seq(4, 3) == 96);
  CHECK(d_seq(6, 3) == 512);
  for (unsigned m = 2; m <= 5; ++m)
    for (unsigned r = 1; r <= 4; ++r)
      CHECK(d_seq(m * r, m) == std::uint64_t(1) << (m * r + 3));
  CHECK_THROWS_AS(d_seq(3, 1), std::invalid_argument);
  CHECK_THROWS_AS(d_seq(3, 0), std::invalid_argument);

  CHECK(c_seq(0) == 4);
  CHECK(c_seq(1) == 12);
  CHECK(c_seq(2) == 32);
  CHECK(c_seq(3) == 56);
  CHECK(c_seq(4) == 120);
  for (unsigned n = 1; n <= 30; ++n) CHECK(c_seq(n + 2) == c_seq(n + 1) + 2 * c_seq(n));
  CHECK(c_seq(2) != c_seq(1) + 2 * c_seq(0));  // the recurrence starts one step late
  for (unsigned n = 1; n <= 40; ++n) {
    std::uint64_t p = std::uint64_t(1) << n;
    CHECK(3 * c_seq(n) == (n % 2 == 0 ? 22 * p + 8 : 22 * p - 8));
  }
}

TEST_CASE("generating function closed forms") {
  const BigRational w16(1, 16);
  CHECK(gf_eval(w16, 1) == BigRational(582, 119));
  CHECK(gf_eval(w16, 2) == BigRational(44, 9));
  CHECK(1 + gf_eval(w16, 2) / 8 == BigRational(29, 18));
  CHECK(gf_eval(BigRational(1, 4), 2) == BigRational(32, 3));
  CHECK(gf_eval(BigRational(1, 4), 1) == BigRational(54, 5));

  for (unsigned m = 2; m <= 12; ++m) {
    BigInt X = pow2b(3 * m);
    CHECK(gf_eval(w16, m) == BigRational(34 * X - 20, 7 * (X - 1)));
  }

  CHECK_THROWS_AS(gf_eval(BigRational(1, 2), 2), std::domain_error);
  CHECK_THROWS_AS(gf_eval(BigRational(-1, 2), 3), std::domain_error);
  CHECK_THROWS_AS(gf_eval(BigRational(5, 8), 1), std::domain_error);
  CHECK_THROWS_AS(gf_eval(w16, 0), std::invalid_argument);
}

TEST_CASE("partial sums land within the tail bound") {
  const std::vector<BigRational> ws = {BigRational(1, 16), BigRational(1, 10), BigRational(2, 5)};
  for (const BigRational& w : ws) {
    for (unsigned m : {1u, 2u, 3u, 5u}) {
      BigRational gap = abs(gf_eval(w, m) - gf_partial_sum(w, m, 60));
      CHECK(gap <= gf_tail_bound(w, 60));
    }
    CHECK(gf_tail_bound(w, 10) > 0);
  }
  CHECK(gf_partial_sum(BigRational(1, 16), 2, 0) == 0);
  CHECK(gf_partial_sum(BigRational(1, 16), 2, 1) == 4);
  CHECK_THROWS_AS(gf_tail_bound(BigRational(1, 2), 5), std::domain_error);
  CHECK_THROWS_AS(gf_tail_bound(BigRational(0), 5), std::domain_error);
}

TEST_CASE("limit pairs") {
  HKPair p1 = ehk_s(1);
  CHECK(p1.e_hk == BigRational(767, 476));
  CHECK(p1.s == BigRational(185, 476));
  HKPair p2 = ehk_s(2);
  CHECK(p2.e_hk == BigRational(29, 18));
  CHECK(p2.s == BigRational(7, 18));

  for (unsigned m = 1; m <= 20; ++m) {
    HKPair p = ehk_s(m);
    CHECK(p.e_hk + p.s == 2);
    CHECK(p.s > 0);
    if (m > 1) {
      CHECK(ehk_s(m - 1).s < p.s);
      CHECK(ehk_s(m - 1).e_hk > p.e_hk);
    }
  }
  CHECK_THROWS_AS(ehk_s(0), std::invalid_argument);
}

TEST_CASE("closed level values") {
  for (unsigned m : {1u, 2u, 5u}) CHECK(closed_en_G(0, m) == 1);
  for (unsigned m = 1; m <= 6; ++m) CHECK(closed_en_G(1, m) == 24);
  CHECK(closed_en_G(2, 1) == 408);
  CHECK(closed_en_G(2, 2) == 408);
  CHECK(closed_en_G(2, 5) == 408);
  CHECK(closed_en_G(3, 3) == 6576);
  CHECK(closed_en_G(3, 4) == 6576);
  CHECK(closed_en_G(4, 4) == 105312);
  CHECK_THROWS_AS(closed_en_G(3, 2), std::domain_error);
  CHECK_THROWS_AS(closed_en_G(3, 1), std::domain_error);

  // unrolled recurrence == closed form on its whole validity range
  for (unsigned m = 2; m <= 6; ++m) {
    std::vector<BigInt> e = surface_series(m, m);
    for (unsigned n = 0; n <= m; ++n) CHECK(e[n] == closed_en_G(n, m));
  }
  std::vector<BigInt> e1 = surface_series(1, 2);
  CHECK(e1[1] == closed_en_G(1, 1));
  CHECK(e1[2] == closed_en_G(2, 1));
}

TEST_CASE("scaled coefficients peel off the level sums") {
  HKSeries s{{BigInt(1), BigInt(24), BigInt(408), BigInt(6592)}, 16};
  std::vector<BigInt> expect = {1, 8, 24, 64};
  CHECK(scaled_coefficients(s) == expect);

  HKSeries alt{{BigInt(1), BigInt(24)}, 8};
  CHECK(scaled_coefficients(alt) == std::vector<BigInt>{1, 16});
  CHECK(scaled_coefficients(HKSeries{{}, 16}).empty());

  // for the recurrence-built series the peeled entries are 1, 2 d_0, 2 d_1, ...
  for (unsigned m : {2u, 3u, 4u}) {
    std::vector<BigInt> coeffs = scaled_coefficients(HKSeries{surface_series(m, 12), 16});
    CHECK(coeffs[0] == 1);
    for (unsigned n = 1; n < coeffs.size(); ++n) CHECK(coeffs[n] == 2 * BigInt(d_seq(n - 1, m)));
  }
}

TEST_CASE("termwise products") {
  std::vector<BigInt> a = {1, 2, 4}, b = {1, 3, 5};
  CHECK(hadamard_product(a, b) == std::vector<BigInt>{1, 6, 20});
  CHECK(hadamard_product(b, a) == hadamard_product(a, b));
  std::vector<BigInt> c = {-2, 3, 7};
  CHECK(hadamard_product(hadamard_product(a, b), c) ==
        hadamard_product(a, hadamard_product(b, c)));
  CHECK_THROWS_AS(hadamard_product(a, {1, 2}), std::invalid_argument);
}

TEST_CASE("two-factor product series") {
  std::vector<BigInt> s2 = scaled_coefficients(HKSeries{surface_series(2, 3), 16});
  std::vector<BigInt> s3 = scaled_coefficients(HKSeries{surface_series(3, 3), 16});
  CHECK(s2 == std::vector<BigInt>{1, 8, 24, 64});
  CHECK(s3 == std::vector<BigInt>{1, 8, 24, 48});
  std::vector<BigInt> had = hadamard_product(s2, s3);
  CHECK(had == std::vector<BigInt>{1, 64, 576, 3072});
  for (unsigned k = 1; k < had.size(); ++k)
    CHECK(had[k] == 4 * pi_coeff({2, 3}, k - 1));
}

TEST_CASE("multi-parameter limits") {
  HKPair q = multi_param({2, 2});
  CHECK(q.e_hk == BigRational(3145, 2046));
  CHECK(q.s == BigRational(947, 2046));

  for (unsigned m = 2; m <= 8; ++m) {
    HKPair single = multi_param({m});
    CHECK(single.e_hk == ehk_s(m).e_hk);
    CHECK(single.s == ehk_s(m).s);
  }

  const std::vector<std::vector<unsigned>> sum_lists = {{2, 3}, {2, 2, 2}, {3, 4}, {2, 2, 3, 3}};
  for (const std::vector<unsigned>& ms : sum_lists) {
    HKPair p = multi_param(ms);
    CHECK(p.e_hk + p.s == 2);
    CHECK(p.s > 0);
  }

  CHECK(multi_param({2, 2}).e_hk > multi_param({2, 3}).e_hk);
  CHECK(multi_param({2, 3}).e_hk > multi_param({3, 3}).e_hk);

  const std::vector<std::vector<unsigned>> route_lists = {
      {2}, {3}, {2, 2}, {2, 3}, {3, 3}, {2, 2, 2}, {2, 3, 4}, {2, 2, 3, 3}};
  for (const std::vector<unsigned>& ms : route_lists)
    CHECK(multi_param(ms).e_hk == multi_param_via_series(ms));

  CHECK_THROWS_AS(multi_param({}), std::invalid_argument);
  CHECK_THROWS_AS(multi_param({1}), std::invalid_argument);
  CHECK_THROWS_AS(multi_param({2, 1}), std::invalid_argument);
}

TEST_CASE("product coefficients") {
  CHECK(pi_coeff({2, 3}, 0) == 16);
  CHECK(pi_coeff({2, 3}, 1) == 144);
  CHECK(pi_coeff({2, 3}, 6) == BigInt(1) << 18);
  for (unsigned n = 0; n <= 30; ++n) CHECK(pi_coeff({2}, n) == BigInt(d_seq(n, 2)));
  for (unsigned n = 0; n <= 20; ++n) {
    BigInt lit = BigInt(d_seq(n, 2)) * d_seq(n, 3) * d_seq(n, 4);
    CHECK(pi_coeff({2, 3, 4}, n) == lit);
  }
  // the dual-route consistency check inside pi_coeff throws if either
  // expression drifts; sweep it over a wide grid
  const std::vector<std::vector<unsigned>> grids = {{2}, {5}, {2, 2}, {2, 3, 4}, {2, 2, 3, 3, 5, 6}};
  for (const std::vector<unsigned>& ms : grids)
    for (unsigned n = 0; n <= 60; ++n) CHECK_NOTHROW(pi_coeff(ms, n));
}

TEST_CASE("cone reference limit") {
  CHECK(monsky_reference(2) == BigRational(49, 16));
  CHECK(monsky_reference(3) == BigRational(193, 64));
  for (unsigned m = 2; m <= 12; ++m) {
    CHECK(monsky_reference(m) > 3);
    if (m > 2) CHECK(monsky_reference(m) < monsky_reference(m - 1));
  }
  CHECK_THROWS_AS(monsky_reference(1), std::invalid_argument);
  CHECK_THROWS_AS(monsky_reference(0), std::invalid_argument);
}

TEST_CASE("decimal rendering") {
  CHECK(decimal_string(BigRational(193, 64), 6) == "3.015625");
  CHECK(decimal_string(BigRational(1, 3), 4) == "0.3333");
  CHECK(decimal_string(BigRational(29, 18), 6) == "1.611111");
  CHECK(decimal_string(BigRational(5), 2) == "5.00");
  CHECK(decimal_string(BigRational(1, 8), 2) == "0.13");    // half rounds away
  CHECK(decimal_string(BigRational(-1, 8), 2) == "-0.13");  // ... on both sides
  CHECK(decimal_string(BigRational(3, 2), 0) == "2");
  CHECK(decimal_string(BigRational(-3, 2), 0) == "-2");
  CHECK(decimal_string(BigRational(1, 3), 0) == "0");
  CHECK(decimal_string(BigRational(-1, 1000), 2) == "0.00");  // never "-0.00"
}
