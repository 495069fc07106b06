#include "hklab/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hklab/bracket.hpp"
#include "hklab/field.hpp"
#include "hklab/formulas.hpp"
#include "hklab/harness.hpp"
#include "hklab/hk.hpp"
#include "hklab/pairs.hpp"
#include "hklab/parallel.hpp"
#include "hklab/poly.hpp"

namespace hklab {
namespace {

using njson = nlohmann::ordered_json;

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

unsigned parse_unsigned(const std::string& s, const std::string& what) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(s, &pos);
  } catch (const std::exception&) {
    pos = std::string::npos;
  }
  if (pos != s.size() || s.empty())
    throw std::invalid_argument("config: " + what + " expects an unsigned integer, got '" + s + "'");
  return static_cast<unsigned>(v);
}

bool parse_bool(const std::string& s, const std::string& what) {
  if (s == "true" || s == "1") return true;
  if (s == "false" || s == "0") return false;
  throw std::invalid_argument("config: " + what + " expects true/false, got '" + s + "'");
}

BigRational parse_rational(const std::string& s) {
  try {
    std::size_t slash = s.find('/');
    if (slash == std::string::npos) return BigRational(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw std::runtime_error("zero denominator");
    return BigRational(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("expected a rational like 1/16, got '" + s + "'");
  }
}

njson load_json(const std::string& path) {
  if (path == "-") return njson::parse(std::cin);
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return njson::parse(in);
}

njson report_json(const VerificationReport& r, bool timings) {
  njson o{{"alpha", r.alpha},   {"m_alpha", r.m_alpha},
          {"m_lambda", r.m_lambda}, {"case_equal", r.case_equal},
          {"n", r.n},           {"j", r.j},
          {"lhs", r.lhs},       {"rhs", r.rhs.str()},
          {"e", njson::array({r.e[0], r.e[1], r.e[2]})},
          {"pass", r.pass}};
  if (timings) o["elapsed_seconds"] = r.elapsed_seconds;
  return o;
}

std::vector<BigInt> load_coefficients(const std::string& path) {
  njson doc = load_json(path);
  if (!doc.is_array()) throw std::invalid_argument(path + ": expected a JSON array");
  std::vector<BigInt> v;
  for (const auto& item : doc) {
    if (item.is_string())
      v.emplace_back(item.get<std::string>());
    else if (item.is_number_unsigned())
      v.emplace_back(item.get<std::uint64_t>());
    else if (item.is_number_integer())
      v.emplace_back(item.get<std::int64_t>());
    else
      throw std::invalid_argument(path + ": coefficients must be integers or decimal strings");
  }
  return v;
}

}  // namespace

RunConfig::RunConfig()
    : max_n(2),
      max_degree(2),
      direct_mode_ceiling(2),
      worker_count(resolve_workers(0)),
      output_format("text"),
      extended_j0(false) {}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open " + path);
  RunConfig cfg;
  std::string line;
  while (std::getline(in, line)) {
    std::string t = strip(line);
    if (t.empty() || t[0] == '#') continue;
    std::size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: expected key=value, got '" + t + "'");
    std::string key = strip(t.substr(0, eq));
    std::string value = strip(t.substr(eq + 1));
    if (key == "max_n") {
      cfg.max_n = parse_unsigned(value, key);
      if (cfg.max_n == 0) throw std::invalid_argument("config: max_n must be positive");
    } else if (key == "max_degree") {
      cfg.max_degree = parse_unsigned(value, key);
      if (cfg.max_degree == 0) throw std::invalid_argument("config: max_degree must be positive");
    } else if (key == "direct_mode_ceiling") {
      cfg.direct_mode_ceiling = parse_unsigned(value, key);
      if (cfg.direct_mode_ceiling == 0)
        throw std::invalid_argument("config: direct_mode_ceiling must be positive");
    } else if (key == "worker_count") {
      cfg.worker_count = parse_unsigned(value, key);
      if (cfg.worker_count == 0) throw std::invalid_argument("config: worker_count must be >= 1");
    } else if (key == "output_format") {
      if (value != "text" && value != "json" && value != "csv")
        throw std::invalid_argument("config: output_format must be text, json or csv");
      cfg.output_format = value;
    } else if (key == "extended_j0") {
      cfg.extended_j0 = parse_bool(value, key);
    } else {
      throw std::invalid_argument("config: unknown key '" + key + "'");
    }
  }
  return cfg;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::vector<std::string> rest;
  for (std::size_t i = 0; i < args.size(); ++i) {
    try {
      if (args[i] == "--config") {
        if (i + 1 >= args.size()) {
          err << "hklab: --config needs a file argument\n";
          return 2;
        }
        cfg = parse_config_file(args[++i]);
      } else if (args[i].rfind("--config=", 0) == 0) {
        cfg = parse_config_file(args[i].substr(9));
      } else {
        rest.push_back(args[i]);
      }
    } catch (const std::exception& e) {
      err << "hklab: " << e.what() << '\n';
      return 2;
    }
  }

  CLI::App app{"exact colength measurements, symbol dynamics and limit formulas for a characteristic-2 quartic family"};
  app.set_version_flag("--version", "hklab 0.1.0");
  app.require_subcommand(1);

  // field ------------------------------------------------------------------
  auto* cmd_field = app.add_subcommand("field", "field contexts, scalar profiles, representatives");
  unsigned field_degree = 0, field_reps = 0;
  std::string field_profile;
  bool field_all = false, field_json = cfg.output_format == "json";
  auto* fd = cmd_field->add_option("--degree", field_degree, "print the modulus of GF(2^m)");
  auto* fp = cmd_field->add_option("--profile", field_profile,
                                   "Artin-Schreier profile of a scalar, e.g. gf2^2:0x2");
  auto* fr = cmd_field->add_option("--reps", field_reps, "list canonical scalars of exact degree m");
  cmd_field->add_flag("--all-scalars", field_all, "list every scalar, not one per Frobenius orbit");
  cmd_field->add_flag("--json", field_json, "JSON output");

  // hk ---------------------------------------------------------------------
  auto* cmd_hk = app.add_subcommand("hk", "box quotient values of quartic powers (JSON records)");
  std::string hk_alpha, hk_batch;
  unsigned hk_n = 1, hk_workers = cfg.worker_count;
  std::uint64_t hk_j = 1;
  auto* ha = cmd_hk->add_option("--alpha", hk_alpha, "scalar, e.g. gf2^2:0x2");
  cmd_hk->add_option("--n", hk_n, "box level (side 2^n)");
  cmd_hk->add_option("--j", hk_j, "power of the quartic (default 1)");
  auto* hb = cmd_hk->add_option("--batch", hk_batch,
                                "JSON list of {alpha, n, j} tasks; '-' reads standard input");
  cmd_hk->add_option("--workers", hk_workers, "worker threads (0 = machine width)")
      ->envname("HKLAB_WORKERS");

  // bracket ----------------------------------------------------------------
  auto* cmd_bracket = app.add_subcommand("bracket", "symbol dynamics: values, sums, count tables");
  unsigned br_m = 1, br_n = 0;
  std::uint64_t br_j = 0;
  bool br_eq = false, br_sum = false, br_json = cfg.output_format == "json";
  std::string br_table;
  cmd_bracket->add_option("--m", br_m, "scalar degree (default 1)");
  cmd_bracket->add_flag("--case-equal", br_eq, "root of y^2+y=alpha already lies in GF(2^m)");
  cmd_bracket->add_option("--n", br_n, "level")->required();
  auto* bj = cmd_bracket->add_option("--j", br_j, "single value <n, j>");
  auto* bs = cmd_bracket->add_flag("--sum", br_sum, "sum of <n, j> over j < 2^n");
  auto* bt = cmd_bracket->add_option("--table", br_table, "A/B counts for t in t0:t1");
  cmd_bracket->add_flag("--json", br_json, "JSON output");

  // formulas ---------------------------------------------------------------
  auto* cmd_formulas = app.add_subcommand("formulas", "closed-form sequences, limits and series");
  cmd_formulas->require_subcommand(1);
  cmd_formulas->fallthrough();
  int f_dec = -1;
  cmd_formulas->add_option("--decimal", f_dec, "append a decimal rendering with this many digits")
      ->check(CLI::PositiveNumber);
  unsigned fe_m = 2, fs_m = 2, fd_m = 2, fd_n = 0, fc_n = 0, fg_m = 2, fen_m = 2, fen_n = 1,
           fmon_m = 2, fpi_n = 0;
  std::string fg_w;
  std::vector<unsigned> fm_ms, fpi_ms;
  bool fm_s = false;
  auto* sub_ehk = cmd_formulas->add_subcommand("ehk", "limit multiplicity for a degree-m scalar");
  sub_ehk->add_option("--m", fe_m, "scalar degree")->required()->check(CLI::PositiveNumber);
  auto* sub_s = cmd_formulas->add_subcommand("s", "limit signature for a degree-m scalar");
  sub_s->add_option("--m", fs_m, "scalar degree")->required()->check(CLI::PositiveNumber);
  auto* sub_dseq = cmd_formulas->add_subcommand("dseq", "level sum d_n for degree m >= 2");
  sub_dseq->add_option("--m", fd_m, "scalar degree")->required();
  sub_dseq->add_option("--n", fd_n, "index")->required();
  auto* sub_cseq = cmd_formulas->add_subcommand("cseq", "level sum c_n for degree 1");
  sub_cseq->add_option("--n", fc_n, "index")->required();
  auto* sub_gf = cmd_formulas->add_subcommand("gf", "generating function value at a rational w");
  sub_gf->add_option("--m", fg_m, "scalar degree")->required();
  sub_gf->add_option("--w", fg_w, "evaluation point, |w| < 1/2, e.g. 1/16")->required();
  auto* sub_en = cmd_formulas->add_subcommand("en", "closed surface value at level n <= m");
  sub_en->add_option("--m", fen_m, "scalar degree")->required();
  sub_en->add_option("--n", fen_n, "level")->required();
  auto* sub_multi = cmd_formulas->add_subcommand("multi", "multi-parameter limits (two routes)");
  sub_multi->add_option("--ms", fm_ms, "scalar degrees, e.g. 2,3")->required()->delimiter(',');
  sub_multi->add_flag("--s", fm_s, "print the signature instead of the multiplicity");
  auto* sub_monsky = cmd_formulas->add_subcommand("monsky", "three-variable cone limit");
  sub_monsky->add_option("--m-lambda", fmon_m, "degree of the Artin-Schreier root (>= 2)")->required();
  auto* sub_pi = cmd_formulas->add_subcommand("pi", "product of per-factor level sums");
  sub_pi->add_option("--ms", fpi_ms, "scalar degrees, e.g. 2,3")->required()->delimiter(',');
  sub_pi->add_option("--n", fpi_n, "index")->required();

  // verify -----------------------------------------------------------------
  auto* cmd_verify = app.add_subcommand("verify", "conjecture sweep / point / reconcile / lemmas");
  unsigned v_max_n = cfg.max_n, v_max_degree = cfg.max_degree, v_workers = cfg.worker_count;
  unsigned v_ceiling = cfg.direct_mode_ceiling, v_n = 1;
  std::uint64_t v_j = 1;
  bool v_extended = cfg.extended_j0, v_all = false, v_timings = false;
  double v_budget = 0;
  std::string v_alpha, v_rec, v_lem;
  cmd_verify->add_option("--max-n", v_max_n, "largest conjecture level");
  cmd_verify->add_option("--max-degree", v_max_degree, "largest scalar degree");
  cmd_verify->add_flag("--extended", v_extended, "include the j = 0 boundary points");
  cmd_verify->add_flag("--all-scalars", v_all, "check every scalar, not one per Frobenius orbit");
  cmd_verify->add_option("--budget", v_budget, "time budget in seconds (0 = none)");
  cmd_verify->add_flag("--timings", v_timings, "emit elapsed_seconds (breaks byte stability)");
  cmd_verify->add_option("--workers", v_workers, "worker threads (0 = machine width)")
      ->envname("HKLAB_WORKERS");
  auto* va = cmd_verify->add_option("--alpha", v_alpha, "single point: scalar");
  cmd_verify->add_option("--n", v_n, "single point: level");
  cmd_verify->add_option("--j", v_j, "single point: index");
  auto* vr = cmd_verify->add_option("--reconcile", v_rec,
                                    "predicted vs measured surface values for this scalar");
  auto* vl = cmd_verify->add_option("--lemmas", v_lem, "structural identities for this scalar");
  cmd_verify->add_option("--direct-ceiling", v_ceiling,
                         "largest level eliminated directly in five variables");

  // pairs ------------------------------------------------------------------
  auto* cmd_pairs = app.add_subcommand("pairs", "signature samples along t = a/2^c");
  std::string p_alpha;
  unsigned p_m = 0, p_c = 0, p_workers = cfg.worker_count;
  std::uint64_t p_amax = 0;
  bool p_csv = cfg.output_format == "csv";
  auto* pa = cmd_pairs->add_option("--alpha", p_alpha, "scalar");
  auto* pm = cmd_pairs->add_option("--m", p_m, "use the canonical degree-m scalar");
  cmd_pairs->add_option("--c", p_c, "denominator exponent; t runs over a/2^c")->required();
  auto* px = cmd_pairs->add_option("--a-max", p_amax, "largest numerator (default 2^(c-1))");
  cmd_pairs->add_flag("--csv", p_csv, "CSV output");
  cmd_pairs->add_option("--workers", p_workers, "worker threads (0 = machine width)")
      ->envname("HKLAB_WORKERS");

  // hadamard ---------------------------------------------------------------
  auto* cmd_hadamard =
      app.add_subcommand("hadamard", "termwise product of two JSON coefficient lists");
  std::string h_a, h_b;
  cmd_hadamard->add_option("a", h_a, "JSON array ('-' for standard input)")->required();
  cmd_hadamard->add_option("b", h_b, "JSON array")->required();

  try {
    std::vector<std::string> reversed(rest.rbegin(), rest.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const CLI::App* target = &app;
    for (auto subs = target->get_subcommands(); !subs.empty(); subs = target->get_subcommands())
      target = subs.front();
    out << target->help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << app.version() << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "hklab: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*cmd_field) {
      if (fd->count() + fp->count() + fr->count() != 1) {
        err << "hklab: field needs exactly one of --degree, --profile, --reps\n";
        return 2;
      }
      if (fd->count()) {
        FieldContextPtr ctx = FieldContext::get(field_degree);
        if (field_json)
          out << njson{{"degree", field_degree}, {"modulus", ctx->modulus_string()}}.dump() << '\n';
        else
          out << "gf2^" << field_degree << " modulus " << ctx->modulus_string() << '\n';
      } else if (fp->count()) {
        FieldElement alpha = parse_element(field_profile);
        ArtinSchreierRoot root = artin_schreier(alpha);
        unsigned trace = absolute_trace(alpha);
        if (field_json) {
          out << njson{{"alpha", to_string(root.profile.alpha)},
                       {"m_alpha", root.profile.m_alpha},
                       {"m_lambda", root.profile.m_lambda},
                       {"case_equal", root.profile.case_equal},
                       {"trace", trace},
                       {"lambda", to_string(root.lambda)}}
                     .dump()
              << '\n';
        } else {
          out << "alpha " << to_string(root.profile.alpha) << '\n'
              << "m_alpha " << root.profile.m_alpha << '\n'
              << "m_lambda " << root.profile.m_lambda << '\n'
              << "case_equal " << (root.profile.case_equal ? "true" : "false") << '\n'
              << "trace " << trace << '\n'
              << "lambda " << to_string(root.lambda) << '\n';
        }
      } else {
        FieldContextPtr ctx = FieldContext::get(field_reps);
        std::vector<FieldElement> reps = degree_representatives(ctx, field_reps, !field_all);
        if (field_json) {
          njson arr = njson::array();
          for (const FieldElement& e : reps) arr.push_back(to_string(e));
          out << arr.dump() << '\n';
        } else {
          for (const FieldElement& e : reps) out << to_string(e) << '\n';
        }
      }
      return 0;
    }

    if (*cmd_hk) {
      struct Task {
        std::string alpha;
        unsigned n;
        std::uint64_t j;
      };
      std::vector<Task> tasks;
      if (hb->count()) {
        if (ha->count()) {
          err << "hklab: hk takes --alpha or --batch, not both\n";
          return 2;
        }
        njson doc = load_json(hk_batch);
        if (!doc.is_array()) {
          err << "hklab: hk --batch expects a JSON array of tasks\n";
          return 2;
        }
        for (const auto& item : doc)
          tasks.push_back({item.at("alpha").get<std::string>(), item.at("n").get<unsigned>(),
                           item.contains("j") ? item.at("j").get<std::uint64_t>() : 1});
      } else {
        if (!ha->count()) {
          err << "hklab: hk needs --alpha (with --n, --j) or --batch\n";
          return 2;
        }
        tasks.push_back({hk_alpha, hk_n, hk_j});
      }
      for (const Task& t : tasks) {
        FieldElement alpha = parse_element(t.alpha);
        Box box(t.n, 3);
        std::uint64_t e =
            t.j == 0 ? 0 : hk_number(power_mod_box(quartic(alpha), t.j, box), t.n, hk_workers);
        out << njson{{"alpha", to_string(alpha)},
                     {"m_alpha", element_degree(alpha)},
                     {"n", t.n},
                     {"j", t.j},
                     {"e", e}}
                   .dump()
            << '\n';
      }
      return 0;
    }

    if (*cmd_bracket) {
      if (bj->count() + bs->count() + bt->count() != 1) {
        err << "hklab: bracket needs exactly one of --j, --sum, --table\n";
        return 2;
      }
      SigmaParams params{br_m, br_eq};
      if (bj->count()) {
        std::uint64_t v = bracket_value(br_n, br_j, params);
        if (br_json)
          out << njson{{"m", br_m}, {"case_equal", br_eq}, {"n", br_n}, {"j", br_j}, {"value", v}}
                     .dump()
              << '\n';
        else
          out << v << '\n';
      } else if (bs->count()) {
        std::uint64_t v = bracket_sum(br_n, params);
        if (br_json)
          out << njson{{"m", br_m}, {"case_equal", br_eq}, {"n", br_n}, {"sum", v}}.dump() << '\n';
        else
          out << v << '\n';
      } else {
        std::int64_t t0 = 0, t1 = 0;
        try {
          std::size_t colon = br_table.find(':');
          if (colon == std::string::npos) {
            t0 = t1 = std::stoll(br_table);
          } else {
            t0 = std::stoll(br_table.substr(0, colon));
            t1 = std::stoll(br_table.substr(colon + 1));
          }
        } catch (const std::exception&) {
          err << "hklab: bracket --table expects t0:t1\n";
          return 2;
        }
        if (t0 > t1) {
          err << "hklab: bracket --table range is backwards\n";
          return 2;
        }
        njson arr = njson::array();
        for (std::int64_t t = t0; t <= t1; ++t) {
          auto [a_count, b_count] = count_ab(br_n, t, params);
          if (br_json)
            arr.push_back(njson{{"t", t}, {"a", a_count}, {"b", b_count}});
          else
            out << t << ' ' << a_count << ' ' << b_count << '\n';
        }
        if (br_json) out << arr.dump() << '\n';
      }
      return 0;
    }

    if (*cmd_formulas) {
      auto emit = [&](const BigRational& v) {
        out << v.str();
        if (f_dec >= 0) out << ' ' << decimal_string(v, static_cast<unsigned>(f_dec));
        out << '\n';
      };
      if (*sub_ehk) {
        emit(ehk_s(fe_m).e_hk);
      } else if (*sub_s) {
        emit(ehk_s(fs_m).s);
      } else if (*sub_dseq) {
        emit(BigRational(BigInt(d_seq(fd_n, fd_m))));
      } else if (*sub_cseq) {
        emit(BigRational(BigInt(c_seq(fc_n))));
      } else if (*sub_gf) {
        emit(gf_eval(parse_rational(fg_w), fg_m));
      } else if (*sub_en) {
        emit(BigRational(closed_en_G(fen_n, fen_m)));
      } else if (*sub_multi) {
        HKPair p = multi_param(fm_ms);
        BigRational via = multi_param_via_series(fm_ms);
        if (via != p.e_hk) {
          err << "hklab: series route disagrees with the closed form\n";
          return 1;
        }
        emit(fm_s ? p.s : p.e_hk);
      } else if (*sub_monsky) {
        emit(monsky_reference(fmon_m));
      } else if (*sub_pi) {
        emit(BigRational(pi_coeff(fpi_ms, fpi_n)));
      }
      return 0;
    }

    if (*cmd_verify) {
      if (va->count() + vr->count() + vl->count() > 1) {
        err << "hklab: verify takes at most one of --alpha, --reconcile, --lemmas\n";
        return 2;
      }
      if (va->count()) {
        VerificationReport r = verify_point(parse_element(v_alpha), v_n, v_j, v_workers);
        out << report_json(r, v_timings).dump() << '\n';
        return r.pass ? 0 : 1;
      }
      if (vr->count()) {
        ReconcileResult res = reconcile(parse_element(v_rec), v_max_n, v_workers);
        for (const ReconcileRow& row : res.rows)
          out << njson{{"n", row.n},
                       {"predicted", row.predicted.str()},
                       {"measured", row.measured},
                       {"match", row.match}}
                     .dump()
              << '\n';
        out << njson{{"all_match", res.all_match}}.dump() << '\n';
        return res.all_match ? 0 : 1;
      }
      if (vl->count()) {
        LemmaChecks c = verify_lemmas(parse_element(v_lem), v_max_n, v_workers, v_ceiling);
        out << njson{{"surface_fold", c.surface_fold},
                     {"midpoint", c.midpoint},
                     {"doubling", c.doubling},
                     {"upper_zero", c.upper_zero},
                     {"pass", c.all()}}
                   .dump()
            << '\n';
        return c.all() ? 0 : 1;
      }
      SweepOptions so;
      so.max_n = v_max_n;
      so.max_degree = v_max_degree;
      so.orbits_only = !v_all;
      so.include_j0 = v_extended;
      so.workers = v_workers;
      so.time_budget_seconds = v_budget;
      SweepSummary summary = sweep(so);
      for (const VerificationReport& r : summary.reports)
        out << report_json(r, v_timings).dump() << '\n';
      out << njson{{"points", summary.points},
                   {"passes", summary.passes},
                   {"failures", summary.failures},
                   {"truncated", summary.truncated}}
                 .dump()
          << '\n';
      return summary.failures == 0 ? 0 : 1;
    }

    if (*cmd_pairs) {
      if (pa->count() + pm->count() != 1) {
        err << "hklab: pairs needs exactly one of --alpha, --m\n";
        return 2;
      }
      FieldElement alpha =
          pa->count() ? parse_element(p_alpha)
                      : degree_representatives(FieldContext::get(p_m), p_m, true).front();
      std::uint64_t a_max =
          px->count() ? p_amax : (p_c == 0 ? 0 : std::uint64_t(1) << (p_c - 1));
      if (p_csv) {
        out << curve_csv(alpha, p_c, a_max, p_workers);
      } else {
        std::vector<PairSample> samples = sample_curve(alpha, p_c, a_max, p_workers);
        for (const PairSample& s : samples)
          out << "a=" << s.a << " t=" << s.t.str() << " s=" << s.s.str() << '\n';
      }
      return 0;
    }

    if (*cmd_hadamard) {
      std::vector<BigInt> prod = hadamard_product(load_coefficients(h_a), load_coefficients(h_b));
      out << '[';
      for (std::size_t i = 0; i < prod.size(); ++i) {
        if (i) out << ',';
        out << prod[i].str();
      }
      out << "]\n";
      return 0;
    }
  } catch (const std::exception& e) {
    err << "hklab: " << e.what() << '\n';
    return 2;
  }
  err << "hklab: no subcommand dispatched\n";
  return 2;
}

}  // namespace hklab
