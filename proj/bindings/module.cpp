// Python bindings.  Exact values cross the boundary as strings: rationals in
// "p/q" form and wide integers in decimal, so nothing is silently rounded;
// the hklab package wraps them back into Fraction / int.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

#include "hklab/bracket.hpp"
#include "hklab/field.hpp"
#include "hklab/formulas.hpp"
#include "hklab/harness.hpp"
#include "hklab/hk.hpp"
#include "hklab/pairs.hpp"
#include "hklab/poly.hpp"

namespace py = pybind11;
using namespace hklab;

namespace {

FieldElement scalar(const std::string& s) { return parse_element(s); }

std::string rat(const BigRational& r) { return r.str(); }

BigRational parse_rat(const std::string& s) { return BigRational(s); }

std::vector<BigInt> parse_ints(const std::vector<std::string>& xs) {
  std::vector<BigInt> out;
  out.reserve(xs.size());
  for (const std::string& x : xs) out.emplace_back(x);
  return out;
}

std::vector<std::string> dump_ints(const std::vector<BigInt>& xs) {
  std::vector<std::string> out;
  out.reserve(xs.size());
  for (const BigInt& x : xs) out.push_back(x.str());
  return out;
}

py::dict report_dict(const VerificationReport& r) {
  py::dict d;
  d["alpha"] = r.alpha;
  d["m_alpha"] = r.m_alpha;
  d["m_lambda"] = r.m_lambda;
  d["case_equal"] = r.case_equal;
  d["n"] = r.n;
  d["j"] = r.j;
  d["lhs"] = r.lhs;
  d["e"] = std::vector<std::uint64_t>(r.e.begin(), r.e.end());
  d["rhs"] = rat(r.rhs);
  d["pass"] = r.pass;
  return d;
}

SigmaParams params(unsigned m_alpha, bool case_equal) { return SigmaParams{m_alpha, case_equal}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "colength measurements, symbol dynamics and limit formulas for the quartic family";
  m.attr("__version__") = "0.1.0";

  // --- field layer ---
  m.def("element_degree", [](const std::string& a) { return element_degree(scalar(a)); });
  m.def("scalar_profile", [](const std::string& a) {
    ArtinSchreierRoot root = artin_schreier(scalar(a));
    py::dict d;
    d["alpha"] = to_string(root.profile.alpha);
    d["m_alpha"] = root.profile.m_alpha;
    d["m_lambda"] = root.profile.m_lambda;
    d["case_equal"] = root.profile.case_equal;
    d["lambda_"] = to_string(root.lambda);
    return d;
  });
  m.def(
      "degree_representatives",
      [](unsigned context_degree, unsigned m, bool orbits_only) {
        std::vector<std::string> out;
        for (const FieldElement& e :
             degree_representatives(FieldContext::get(context_degree), m, orbits_only))
          out.push_back(to_string(e));
        return out;
      },
      py::arg("context_degree"), py::arg("m"), py::arg("orbits_only") = true);

  // --- colength measurements ---
  m.def(
      "hk_number",
      [](const std::string& a, unsigned n, std::uint64_t j, unsigned workers) -> std::uint64_t {
        FieldElement alpha = scalar(a);
        Box box(n, 3);
        if (j == 0) return 0;
        return hk_number(power_mod_box(quartic(alpha), j, box), n, workers);
      },
      py::arg("alpha"), py::arg("n"), py::arg("j") = 1, py::arg("workers") = 0);
  m.def(
      "hk_smoothed",
      [](const std::string& a, unsigned n, const std::string& mode, unsigned workers) {
        if (mode != "lemma_sum" && mode != "direct")
          throw std::invalid_argument("mode must be lemma_sum or direct");
        return hk_smoothed(scalar(a), n,
                           mode == "direct" ? SmoothedMode::direct : SmoothedMode::lemma_sum,
                           workers);
      },
      py::arg("alpha"), py::arg("n"), py::arg("mode") = "lemma_sum", py::arg("workers") = 0);

  // --- symbol dynamics ---
  m.def(
      "bracket_value",
      [](unsigned n, std::uint64_t j, unsigned m_alpha, bool case_equal) {
        return bracket_value(n, j, params(m_alpha, case_equal));
      },
      py::arg("n"), py::arg("j"), py::arg("m_alpha") = 1, py::arg("case_equal") = false);
  m.def(
      "bracket_sum",
      [](unsigned n, unsigned m_alpha, bool case_equal) {
        return bracket_sum(n, params(m_alpha, case_equal));
      },
      py::arg("n"), py::arg("m_alpha") = 1, py::arg("case_equal") = false);
  m.def(
      "state",
      [](unsigned n, std::uint64_t j, unsigned m_alpha, bool case_equal) {
        GroupVector s = state(n, j, params(m_alpha, case_equal));
        py::dict d;
        d["level"] = s.level;
        d["a"] = s.a;
        d["b"] = s.b;
        d["c"] = s.c;
        d["d"] = s.d;
        return d;
      },
      py::arg("n"), py::arg("j"), py::arg("m_alpha") = 1, py::arg("case_equal") = false);

  // --- verification harness ---
  m.def(
      "verify_point",
      [](const std::string& a, unsigned n, std::uint64_t j, unsigned workers) {
        return report_dict(verify_point(scalar(a), n, j, workers));
      },
      py::arg("alpha"), py::arg("n"), py::arg("j"), py::arg("workers") = 0);
  m.def(
      "sweep",
      [](unsigned max_n, unsigned max_degree, bool orbits_only, bool include_j0, unsigned workers,
         double time_budget_seconds) {
        SweepOptions opts;
        opts.max_n = max_n;
        opts.max_degree = max_degree;
        opts.orbits_only = orbits_only;
        opts.include_j0 = include_j0;
        opts.workers = workers;
        opts.time_budget_seconds = time_budget_seconds;
        SweepSummary s = sweep(opts);
        py::list reports;
        for (const VerificationReport& r : s.reports) reports.append(report_dict(r));
        py::dict d;
        d["points"] = s.points;
        d["passes"] = s.passes;
        d["failures"] = s.failures;
        d["truncated"] = s.truncated;
        d["reports"] = reports;
        return d;
      },
      py::arg("max_n") = 2, py::arg("max_degree") = 2, py::arg("orbits_only") = true,
      py::arg("include_j0") = false, py::arg("workers") = 0,
      py::arg("time_budget_seconds") = 0.0);
  m.def(
      "reconcile",
      [](const std::string& a, unsigned max_n, unsigned workers) {
        ReconcileResult res = reconcile(scalar(a), max_n, workers);
        py::list rows;
        for (const ReconcileRow& r : res.rows) {
          py::dict row;
          row["n"] = r.n;
          row["predicted"] = r.predicted.str();
          row["measured"] = r.measured;
          row["match"] = r.match;
          rows.append(row);
        }
        py::dict d;
        d["rows"] = rows;
        d["all_match"] = res.all_match;
        return d;
      },
      py::arg("alpha"), py::arg("max_n"), py::arg("workers") = 0);
  m.def(
      "verify_lemmas",
      [](const std::string& a, unsigned max_n, unsigned workers) {
        LemmaChecks c = verify_lemmas(scalar(a), max_n, workers);
        py::dict d;
        d["surface_fold"] = c.surface_fold;
        d["midpoint"] = c.midpoint;
        d["doubling"] = c.doubling;
        d["upper_zero"] = c.upper_zero;
        d["all"] = c.all();
        return d;
      },
      py::arg("alpha"), py::arg("max_n"), py::arg("workers") = 0);
  m.def(
      "predicted_en",
      [](unsigned m_alpha, bool case_equal, unsigned n) {
        return predicted_en(params(m_alpha, case_equal), n).str();
      },
      py::arg("m_alpha"), py::arg("case_equal"), py::arg("n"));

  // --- closed formulas ---
  m.def("d_seq", &d_seq, py::arg("n"), py::arg("m"));
  m.def("c_seq", &c_seq, py::arg("n"));
  m.def(
      "gf_eval", [](const std::string& w, unsigned m) { return rat(gf_eval(parse_rat(w), m)); },
      py::arg("w"), py::arg("m"));
  m.def(
      "gf_partial_sum",
      [](const std::string& w, unsigned m, unsigned terms) {
        return rat(gf_partial_sum(parse_rat(w), m, terms));
      },
      py::arg("w"), py::arg("m"), py::arg("terms"));
  m.def(
      "gf_tail_bound",
      [](const std::string& w, unsigned terms) { return rat(gf_tail_bound(parse_rat(w), terms)); },
      py::arg("w"), py::arg("terms"));
  m.def("ehk_s", [](unsigned m) {
    HKPair p = ehk_s(m);
    return std::make_pair(rat(p.e_hk), rat(p.s));
  });
  m.def("closed_en", [](unsigned n, unsigned m) { return closed_en_G(n, m).str(); }, py::arg("n"),
        py::arg("m"));
  m.def(
      "scaled_coefficients",
      [](const std::vector<std::string>& values, std::uint64_t scale) {
        HKSeries s;
        s.values = parse_ints(values);
        s.scale = scale;
        return dump_ints(scaled_coefficients(s));
      },
      py::arg("values"), py::arg("scale") = 16);
  m.def("hadamard_product", [](const std::vector<std::string>& a, const std::vector<std::string>& b) {
    return dump_ints(hadamard_product(parse_ints(a), parse_ints(b)));
  });
  m.def("multi_param", [](const std::vector<unsigned>& ms) {
    HKPair p = multi_param(ms);
    return std::make_pair(rat(p.e_hk), rat(p.s));
  });
  m.def("multi_param_via_series",
        [](const std::vector<unsigned>& ms) { return rat(multi_param_via_series(ms)); });
  m.def("pi_coeff",
        [](const std::vector<unsigned>& ms, unsigned n) { return pi_coeff(ms, n).str(); });
  m.def("monsky_reference", [](unsigned m_lambda) { return rat(monsky_reference(m_lambda)); });
  m.def(
      "decimal_string",
      [](const std::string& x, unsigned digits) { return decimal_string(parse_rat(x), digits); },
      py::arg("x"), py::arg("digits") = 6);

  // --- signature curves ---
  m.def(
      "pair_signature",
      [](const std::string& a, std::uint64_t exponent, unsigned c, unsigned workers) {
        return rat(pair_signature(scalar(a), exponent, c, workers));
      },
      py::arg("alpha"), py::arg("a"), py::arg("c"), py::arg("workers") = 0);
  m.def(
      "sample_curve",
      [](const std::string& a, unsigned c, std::uint64_t a_max, unsigned workers) {
        py::list out;
        for (const PairSample& s : sample_curve(scalar(a), c, a_max, workers)) {
          py::dict d;
          d["a"] = s.a;
          d["c"] = s.c;
          d["t"] = rat(s.t);
          d["s"] = rat(s.s);
          out.append(d);
        }
        return out;
      },
      py::arg("alpha"), py::arg("c"), py::arg("a_max"), py::arg("workers") = 0);
  m.def(
      "curve_csv",
      [](const std::string& a, unsigned c, std::uint64_t a_max, unsigned workers) {
        return curve_csv(scalar(a), c, a_max, workers);
      },
      py::arg("alpha"), py::arg("c"), py::arg("a_max"), py::arg("workers") = 0);
}
