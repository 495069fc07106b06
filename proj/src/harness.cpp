#include "hklab/harness.hpp"

#include <chrono>
#include <stdexcept>

#include "hklab/hk.hpp"
#include "hklab/poly.hpp"

namespace hklab {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

VerificationReport make_report(const FieldElement& alpha, const ScalarProfile& prof,
                               unsigned n, std::uint64_t j, std::uint64_t lhs,
                               const std::array<std::uint64_t, 3>& e) {
  VerificationReport r;
  r.alpha = to_string(alpha);
  r.m_alpha = prof.m_alpha;
  r.m_lambda = prof.m_lambda;
  r.case_equal = prof.case_equal;
  r.n = n;
  r.j = j;
  r.lhs = lhs;
  r.e = e;
  BigInt diff = 2 * BigInt(e[1]) - BigInt(e[0]) - BigInt(e[2]);
  r.rhs = BigRational(diff, BigInt(2));
  r.pass = (2 * BigInt(lhs) == diff);
  return r;
}

}  // namespace

VerificationReport verify_point(const FieldElement& alpha, unsigned n, std::uint64_t j,
                                unsigned workers) {
  if (n == 0) throw std::invalid_argument("verify_point: n must be >= 1");
  auto t0 = Clock::now();
  ScalarProfile prof = artin_schreier(alpha).profile;
  std::uint64_t lhs = bracket_value(n, j, sigma_params(prof));  // validates j < 2^n

  MultiPoly g = quartic(alpha);
  Box box(n + 1, 3);
  std::array<std::uint64_t, 3> e{};
  for (unsigned k = 0; k < 3; ++k) {
    std::uint64_t power = 2 * j + k;
    e[k] = power == 0 ? 0 : hk_number(power_mod_box(g, power, box), n + 1, workers);
  }

  VerificationReport r = make_report(alpha, prof, n, j, lhs, e);
  r.elapsed_seconds = seconds_since(t0);
  return r;
}

SweepSummary sweep(const SweepOptions& opts) {
  if (opts.max_n == 0) throw std::invalid_argument("sweep: max_n must be >= 1");
  if (opts.max_degree == 0) throw std::invalid_argument("sweep: max_degree must be >= 1");
  auto t0 = Clock::now();
  SweepSummary summary;

  for (unsigned m = 1; m <= opts.max_degree && !summary.truncated; ++m) {
    FieldContextPtr ctx = FieldContext::get(m);
    for (const FieldElement& alpha : degree_representatives(ctx, m, opts.orbits_only)) {
      if (summary.truncated) break;
      ScalarProfile prof = artin_schreier(alpha).profile;
      SigmaParams params = sigma_params(prof);
      for (unsigned n = 1; n <= opts.max_n; ++n) {
        if (opts.time_budget_seconds > 0 && seconds_since(t0) > opts.time_budget_seconds) {
          summary.truncated = true;
          break;
        }
        std::uint64_t top = std::uint64_t(1) << (n + 1);
        std::vector<std::uint64_t> seq =
            hk_power_sequence(alpha, n + 1, top, /*use_shortcuts=*/false, opts.workers);
        for (std::uint64_t j = opts.include_j0 ? 0 : 1; j < (std::uint64_t(1) << n); ++j) {
          std::uint64_t lhs = bracket_value(n, j, params);
          std::array<std::uint64_t, 3> e = {seq[2 * j], seq[2 * j + 1], seq[2 * j + 2]};
          VerificationReport r = make_report(alpha, prof, n, j, lhs, e);
          ++summary.points;
          ++(r.pass ? summary.passes : summary.failures);
          summary.reports.push_back(std::move(r));
        }
      }
    }
  }
  return summary;
}

BigInt predicted_en(const SigmaParams& params, unsigned n) {
  if (n == 0) return 1;
  BigInt e = 24;
  for (unsigned v = 1; v < n; ++v) e = 16 * e + 2 * BigInt(bracket_sum(v, params));
  return e;
}

ReconcileResult reconcile(const FieldElement& alpha, unsigned max_n, unsigned workers) {
  ScalarProfile prof = artin_schreier(alpha).profile;
  SigmaParams params = sigma_params(prof);
  ReconcileResult result;
  for (unsigned n = 1; n <= max_n; ++n) {
    ReconcileRow row;
    row.n = n;
    row.predicted = predicted_en(params, n);
    row.measured = hk_smoothed(alpha, n, SmoothedMode::lemma_sum, workers,
                               /*direct_ceiling=*/2, /*use_shortcuts=*/false);
    row.match = (row.predicted == BigInt(row.measured));
    result.all_match = result.all_match && row.match;
    result.rows.push_back(std::move(row));
  }
  return result;
}

LemmaChecks verify_lemmas(const FieldElement& alpha, unsigned max_n, unsigned workers,
                          unsigned direct_ceiling) {
  if (max_n == 0) throw std::invalid_argument("verify_lemmas: max_n must be >= 1");
  LemmaChecks checks;

  // Shortcut-free power values for every level up to max_n.
  std::vector<std::vector<std::uint64_t>> seq(max_n + 1);
  for (unsigned v = 1; v <= max_n; ++v)
    seq[v] = hk_power_sequence(alpha, v, std::uint64_t(1) << v,
                               /*use_shortcuts=*/false, workers);

  for (unsigned v = 1; v <= max_n && v <= direct_ceiling; ++v) {
    std::uint64_t folded = 0;
    for (std::uint64_t j = 1; j < (std::uint64_t(1) << v); ++j) folded += 2 * seq[v][j];
    folded += seq[v][std::uint64_t(1) << v];
    std::uint64_t direct = hk_smoothed(alpha, v, SmoothedMode::direct, workers, direct_ceiling);
    checks.surface_fold = checks.surface_fold && (folded == direct);
  }

  for (unsigned v = 2; v <= max_n; ++v) {
    for (std::uint64_t j = std::uint64_t(1) << (v - 2); j < (std::uint64_t(1) << (v - 1)); ++j) {
      checks.midpoint =
          checks.midpoint && (2 * seq[v][2 * j + 1] == seq[v][2 * j] + seq[v][2 * j + 2]);
    }
  }

  for (unsigned v = 2; v <= max_n; ++v) {
    for (std::uint64_t j = 1; 2 * j <= (std::uint64_t(1) << v); ++j) {
      checks.doubling = checks.doubling && (seq[v][2 * j] == 8 * seq[v - 1][j]);
    }
  }

  SigmaParams params = sigma_params(artin_schreier(alpha).profile);
  for (unsigned n = 1; n <= std::max(max_n, 10u); ++n) {
    for (std::uint64_t j = std::uint64_t(1) << (n - 1); j < (std::uint64_t(1) << n); ++j) {
      checks.upper_zero = checks.upper_zero && (bracket_value(n, j, params) == 0);
    }
  }
  return checks;
}

}  // namespace hklab
