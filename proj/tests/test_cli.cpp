#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hklab/cli.hpp"

using namespace hklab;

namespace {

struct RunResult {
  int rc;
  std::string out;
  std::string err;
};

RunResult invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int rc = run(args, out, err);
  return {rc, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

struct TempFile {
  std::filesystem::path path;
  TempFile(const std::string& name, const std::string& contents)
      : path(std::filesystem::temp_directory_path() / name) {
    std::ofstream f(path);
    f << contents;
  }
  ~TempFile() { std::filesystem::remove(path); }
  std::string str() const { return path.string(); }
};

}  // namespace

TEST_CASE("version and help") {
  RunResult v = invoke({"--version"});
  CHECK(v.rc == 0);
  CHECK(v.out == "hklab 0.1.0\n");
  CHECK(v.err.empty());

  RunResult h = invoke({"--help"});
  CHECK(h.rc == 0);
  CHECK(h.out.find("field") != std::string::npos);
  CHECK(h.out.find("verify") != std::string::npos);

  RunResult none = invoke({});
  CHECK(none.rc == 2);
  RunResult bogus = invoke({"frobnicate"});
  CHECK(bogus.rc == 2);
  CHECK(bogus.err.rfind("hklab: ", 0) == 0);
}

TEST_CASE("formulas subcommands") {
  CHECK(invoke({"formulas", "ehk", "--m", "2"}).out == "29/18\n");
  CHECK(invoke({"formulas", "s", "--m", "1"}).out == "185/476\n");
  CHECK(invoke({"formulas", "--decimal", "6", "s", "--m", "2"}).out == "7/18 0.388889\n");
  CHECK(invoke({"formulas", "dseq", "--m", "2", "--n", "3"}).out == "48\n");
  CHECK(invoke({"formulas", "cseq", "--n", "3"}).out == "56\n");
  CHECK(invoke({"formulas", "gf", "--m", "2", "--w", "1/16"}).out == "44/9\n");
  CHECK(invoke({"formulas", "en", "--m", "3", "--n", "3"}).out == "6576\n");
  CHECK(invoke({"formulas", "multi", "--ms", "2,2"}).out == "3145/2046\n");
  CHECK(invoke({"formulas", "multi", "--ms", "2,2", "--s"}).out == "947/2046\n");
  CHECK(invoke({"formulas", "monsky", "--m-lambda", "2"}).out == "49/16\n");
  CHECK(invoke({"formulas", "pi", "--ms", "2,3", "--n", "1"}).out == "144\n");

  RunResult pole = invoke({"formulas", "gf", "--m", "2", "--w", "1/2"});
  CHECK(pole.rc == 2);
  CHECK(pole.err.rfind("hklab: ", 0) == 0);
  RunResult badw = invoke({"formulas", "gf", "--m", "2", "--w", "x"});
  CHECK(badw.rc == 2);
  CHECK(invoke({"formulas", "ehk"}).rc == 2);     // --m is required
  CHECK(invoke({"formulas"}).rc == 2);            // subcommand required
  CHECK(invoke({"formulas", "multi", "--ms", "1,2"}).rc == 2);
}

TEST_CASE("bracket subcommand") {
  CHECK(invoke({"bracket", "--m", "2", "--n", "2", "--j", "1"}).out == "20\n");
  CHECK(invoke({"bracket", "--m", "2", "--n", "2", "--sum"}).out == "32\n");
  CHECK(invoke({"bracket", "--n", "2", "--sum"}).out == "32\n");  // degree defaults to 1
  CHECK(invoke({"bracket", "--m", "2", "--n", "2", "--table", "2:3"}).out == "2 1 1\n3 0 0\n");
  CHECK(invoke({"bracket", "--m", "2", "--n", "1", "--j", "0", "--json"}).out ==
        "{\"m\":2,\"case_equal\":false,\"n\":1,\"j\":0,\"value\":12}\n");

  CHECK(invoke({"bracket", "--n", "2", "--j", "1", "--sum"}).rc == 2);
  CHECK(invoke({"bracket", "--n", "2"}).rc == 2);
  CHECK(invoke({"bracket", "--j", "1"}).rc == 2);  // --n is required
  CHECK(invoke({"bracket", "--n", "2", "--table", "3:2"}).rc == 2);
  CHECK(invoke({"bracket", "--n", "2", "--table", "x"}).rc == 2);
  CHECK(invoke({"bracket", "--n", "2", "--j", "4"}).rc == 2);  // j out of range
}

TEST_CASE("field subcommand") {
  CHECK(invoke({"field", "--degree", "2"}).out == "gf2^2 modulus x^2 + x + 1\n");
  CHECK(invoke({"field", "--reps", "2"}).out == "gf2^2:0x2\n");
  CHECK(invoke({"field", "--reps", "2", "--all-scalars"}).out == "gf2^2:0x2\ngf2^2:0x3\n");
  CHECK(invoke({"field", "--reps", "2", "--json"}).out == "[\"gf2^2:0x2\"]\n");

  std::vector<std::string> prof = lines_of(invoke({"field", "--profile", "gf2^1:0x1"}).out);
  REQUIRE(prof.size() == 6);
  CHECK(prof[0] == "alpha gf2^1:0x1");
  CHECK(prof[1] == "m_alpha 1");
  CHECK(prof[2] == "m_lambda 2");
  CHECK(prof[3] == "case_equal false");
  CHECK(prof[4] == "trace 1");
  CHECK(prof[5].rfind("lambda gf2^2:0x", 0) == 0);

  CHECK(invoke({"field"}).rc == 2);
  CHECK(invoke({"field", "--degree", "2", "--reps", "2"}).rc == 2);
  CHECK(invoke({"field", "--profile", "nonsense"}).rc == 2);
}

TEST_CASE("hk subcommand") {
  RunResult one = invoke({"hk", "--alpha", "gf2^2:0x2", "--n", "2", "--j", "1"});
  CHECK(one.rc == 0);
  CHECK(one.out == "{\"alpha\":\"gf2^2:0x2\",\"m_alpha\":2,\"n\":2,\"j\":1,\"e\":44}\n");

  TempFile batch("hklab_test_cli_batch.json",
                 "[{\"alpha\":\"gf2^1:0x1\",\"n\":1},{\"alpha\":\"gf2^2:0x2\",\"n\":2,\"j\":2}]");
  std::vector<std::string> rows = lines_of(invoke({"hk", "--batch", batch.str()}).out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == "{\"alpha\":\"gf2^1:0x1\",\"m_alpha\":1,\"n\":1,\"j\":1,\"e\":8}");
  CHECK(rows[1] == "{\"alpha\":\"gf2^2:0x2\",\"m_alpha\":2,\"n\":2,\"j\":2,\"e\":64}");

  CHECK(invoke({"hk"}).rc == 2);
  CHECK(invoke({"hk", "--alpha", "gf2^2:0x2", "--batch", batch.str()}).rc == 2);
  CHECK(invoke({"hk", "--alpha", "not-a-scalar", "--n", "1"}).rc == 2);
  CHECK(invoke({"hk", "--batch", "/nonexistent/batch.json"}).rc == 2);
}

TEST_CASE("verify subcommand") {
  RunResult point = invoke({"verify", "--alpha", "gf2^2:0x2", "--n", "2", "--j", "1"});
  CHECK(point.rc == 0);
  CHECK(point.out ==
        "{\"alpha\":\"gf2^2:0x2\",\"m_alpha\":2,\"m_lambda\":4,\"case_equal\":false,"
        "\"n\":2,\"j\":1,\"lhs\":20,\"rhs\":\"20\",\"e\":[352,452,512],\"pass\":true}\n");

  RunResult grid = invoke({"verify", "--max-n", "2", "--max-degree", "2"});
  CHECK(grid.rc == 0);
  std::vector<std::string> rows = lines_of(grid.out);
  REQUIRE(rows.size() == 9);
  CHECK(rows.back() == "{\"points\":8,\"passes\":8,\"failures\":0,\"truncated\":false}");

  RunResult rec = invoke({"verify", "--reconcile", "gf2^2:0x2", "--max-n", "2"});
  CHECK(rec.rc == 0);
  std::vector<std::string> rec_rows = lines_of(rec.out);
  REQUIRE(rec_rows.size() == 3);
  CHECK(rec_rows[0] == "{\"n\":1,\"predicted\":\"24\",\"measured\":24,\"match\":true}");
  CHECK(rec_rows[1] == "{\"n\":2,\"predicted\":\"408\",\"measured\":408,\"match\":true}");
  CHECK(rec_rows[2] == "{\"all_match\":true}");

  RunResult lem = invoke({"verify", "--lemmas", "gf2^1:0x1", "--max-n", "2"});
  CHECK(lem.rc == 0);
  CHECK(lem.out ==
        "{\"surface_fold\":true,\"midpoint\":true,\"doubling\":true,"
        "\"upper_zero\":true,\"pass\":true}\n");

  CHECK(invoke({"verify", "--alpha", "gf2^2:0x2", "--reconcile", "gf2^2:0x2"}).rc == 2);
  CHECK(invoke({"verify", "--alpha", "gf2^2:0x2", "--n", "0"}).rc == 2);
}

TEST_CASE("verify output is byte-stable across worker counts") {
  RunResult w1 = invoke({"verify", "--max-n", "2", "--max-degree", "2", "--workers", "1"});
  RunResult w3 = invoke({"verify", "--max-n", "2", "--max-degree", "2", "--workers", "3"});
  CHECK(w1.rc == 0);
  CHECK(w1.out == w3.out);
}

TEST_CASE("pairs subcommand") {
  RunResult text = invoke({"pairs", "--alpha", "gf2^2:0x2", "--c", "2"});
  CHECK(text.rc == 0);
  CHECK(text.out == "a=0 t=0 s=1\na=1 t=1/4 s=5/16\na=2 t=1/2 s=0\n");

  std::vector<std::string> csv = lines_of(invoke({"pairs", "--m", "3", "--c", "4", "--csv"}).out);
  REQUIRE(csv.size() == 10);
  CHECK(csv[0] == "m_alpha,m_lambda,c,a,t_decimal,s_exact,s_decimal,deriv_decimal");
  CHECK(csv[1].rfind("3,", 0) == 0);

  CHECK(invoke({"pairs", "--c", "2"}).rc == 2);
  CHECK(invoke({"pairs", "--alpha", "gf2^2:0x2", "--m", "2", "--c", "2"}).rc == 2);
  CHECK(invoke({"pairs", "--alpha", "gf2^2:0x2"}).rc == 2);  // --c is required
}

TEST_CASE("hadamard subcommand") {
  TempFile a("hklab_test_cli_a.json", "[1,2,4]");
  TempFile b("hklab_test_cli_b.json", "[1,3,5]");
  RunResult r = invoke({"hadamard", a.str(), b.str()});
  CHECK(r.rc == 0);
  CHECK(r.out == "[1,6,20]\n");

  TempFile big("hklab_test_cli_big.json", "[\"36893488147419103232\",1,1]");
  CHECK(invoke({"hadamard", big.str(), big.str()}).out ==
        "[1361129467683753853853498429727072845824,1,1]\n");

  TempFile shorter("hklab_test_cli_short.json", "[1,2]");
  CHECK(invoke({"hadamard", a.str(), shorter.str()}).rc == 2);
  TempFile object("hklab_test_cli_obj.json", "{\"a\":1}");
  CHECK(invoke({"hadamard", a.str(), object.str()}).rc == 2);
  CHECK(invoke({"hadamard", a.str()}).rc == 2);  // b is required
}

TEST_CASE("config files seed the defaults") {
  TempFile cfg("hklab_test_cli_cfg.ini",
               "# sweep shape\nmax_n = 3\nmax_degree=1\noutput_format = json\n\nextended_j0=false\n");
  RunConfig parsed = parse_config_file(cfg.str());
  CHECK(parsed.max_n == 3);
  CHECK(parsed.max_degree == 1);
  CHECK(parsed.output_format == "json");
  CHECK_FALSE(parsed.extended_j0);

  RunResult swept = invoke({"--config", cfg.str(), "verify"});
  CHECK(swept.rc == 0);
  std::vector<std::string> rows = lines_of(swept.out);
  REQUIRE(rows.size() == 12);  // degree 1 only, n <= 3: 1 + 3 + 7 points + summary
  CHECK(rows.back() == "{\"points\":11,\"passes\":11,\"failures\":0,\"truncated\":false}");

  // explicit flags win over the config file
  RunResult narrowed = invoke({"--config", cfg.str(), "verify", "--max-n", "1"});
  CHECK(lines_of(narrowed.out).back() ==
        "{\"points\":1,\"passes\":1,\"failures\":0,\"truncated\":false}");

  // config-selected json switches the bracket rendering
  CHECK(invoke({"--config", cfg.str(), "bracket", "--m", "2", "--n", "1", "--j", "0"}).out ==
        "{\"m\":2,\"case_equal\":false,\"n\":1,\"j\":0,\"value\":12}\n");

  TempFile unknown("hklab_test_cli_bad1.ini", "max_m = 3\n");
  CHECK_THROWS_AS(parse_config_file(unknown.str()), std::invalid_argument);
  TempFile zero("hklab_test_cli_bad2.ini", "worker_count = 0\n");
  CHECK_THROWS_AS(parse_config_file(zero.str()), std::invalid_argument);
  TempFile format("hklab_test_cli_bad3.ini", "output_format = yaml\n");
  CHECK_THROWS_AS(parse_config_file(format.str()), std::invalid_argument);
  TempFile noeq("hklab_test_cli_bad4.ini", "max_n 3\n");
  CHECK_THROWS_AS(parse_config_file(noeq.str()), std::invalid_argument);
  TempFile badbool("hklab_test_cli_bad5.ini", "extended_j0 = maybe\n");
  CHECK_THROWS_AS(parse_config_file(badbool.str()), std::invalid_argument);
  CHECK_THROWS_AS(parse_config_file("/nonexistent/hklab.ini"), std::invalid_argument);

  CHECK(invoke({"--config", unknown.str(), "verify"}).rc == 2);
  CHECK(invoke({"--config"}).rc == 2);
}
