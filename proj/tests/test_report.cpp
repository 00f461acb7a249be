#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "apery/parse.hpp"
#include "apery/report.hpp"

using namespace apery;

namespace {

MiracleReport sqrt2_report(long K = 60) {
  RunConfig cfg;
  cfg.K = K;
  return run_ra_rec_text("N^2-2*N-1", "[1,2]", "[0,1]", cfg);
}

}  // namespace

TEST_CASE("JSON schema: exact field names in order") {
  RunConfig cfg;
  cfg.K = 200;
  ordered_json j = report_to_json(sqrt2_report(200), cfg);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"operator", "c_operator", "pattern", "growth", "beta",
                                         "delta", "measure", "alpha", "identification", "ini_p",
                                         "ini_q", "classification"});
  std::vector<std::string> pkeys;
  for (auto it = j["pattern"].begin(); it != j["pattern"].end(); ++it) pkeys.push_back(it.key());
  CHECK(pkeys == std::vector<std::string>{"G", "R", "P", "D0"});
  std::vector<std::string> gkeys;
  for (auto it = j["growth"].begin(); it != j["growth"].end(); ++it) gkeys.push_back(it.key());
  CHECK(gkeys == std::vector<std::string>{"k_float", "k_exact"});
  std::vector<std::string> dkeys;
  for (auto it = j["delta"].begin(); it != j["delta"].end(); ++it) dkeys.push_back(it.key());
  CHECK(dkeys ==
        std::vector<std::string>{"rigorous", "empirical_last", "empirical_extrapolated"});
  std::vector<std::string> ikeys;
  for (auto it = j["identification"].begin(); it != j["identification"].end(); ++it) {
    ikeys.push_back(it.key());
  }
  CHECK(ikeys == std::vector<std::string>{"kind", "name", "conjectural"});
}

TEST_CASE("JSON round-trip on fixtures") {
  RunConfig cfg;
  cfg.K = 60;
  auto roundtrip = [&](const MiracleReport& rep) {
    ordered_json j = report_to_json(rep, cfg);
    MiracleReport back = report_from_json(j);
    ordered_json j2 = report_to_json(back, cfg);
    CHECK(j2 == j);
  };
  roundtrip(sqrt2_report());
  MiracleReport z3 = run_ra_rec_text("(n+2)^3*N^2-(2*n+3)*(17*n^2+51*n+39)*N+(n+1)^3", "0,6",
                                     "1,5", cfg);
  roundtrip(z3);
  RunConfig cfg_sum;
  cfg_sum.K = 80;
  cfg_sum.ini_p_override = parse_rational_list("[0,2]");
  roundtrip(run_ra_sum("binomial(n,k)*binomial(n+k,k)*3^k", cfg_sum));
}

TEST_CASE("golden file: sqrt2 report JSON is stable byte-for-byte") {
  RunConfig cfg;
  cfg.K = 40;
  ordered_json j = report_to_json(sqrt2_report(40), cfg);
  std::ifstream in(std::string(GOLDEN_DIR) + "/ra_rec_sqrt2.json");
  REQUIRE(in.good());
  std::string want((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(j.dump(2) + "\n" == want);
}

TEST_CASE("verbose render contains the instantiated delta formula and caveats") {
  RunConfig cfg;
  cfg.K = 60;
  MiracleReport z3 = run_ra_rec_text("(n+2)^3*N^2-(2*n+3)*(17*n^2+51*n+39)*N+(n+1)^3", "0,6",
                                     "1,5", cfg);
  std::string text = render_verbose(z3);
  CHECK(text.find("(2*ln(33.97056275) - ln(1)) / (ln(33.97056275) + 3 + ln(1))") !=
        std::string::npos);
  CHECK(text.find("1.080529431") != std::string::npos);
  CHECK(text.find("Conjectural identification") != std::string::npos);
  CHECK(text.find("unproven step") != std::string::npos);

  MiracleReport dis = run_ra_sum("binomial(n,k)^2*binomial(n+k,k)*2^k", cfg);
  std::string dtext = render_verbose(dis);
  CHECK(dtext.find("Unidentified constant") != std::string::npos);
  CHECK(dtext.find("numerical-analysis interest") != std::string::npos);
}

TEST_CASE("verbose render notes a-priori constants") {
  RunConfig cfg;
  cfg.K = 40;
  IntegralParams params;
  params.log_a = Rational(2);
  MiracleReport rep = run_ra_int(IntegralFamily::Log, params, cfg);
  std::string text = render_verbose(rep);
  CHECK(text.find("known a priori: ln(2)") != std::string::npos);
  REQUIRE(rep.identification.has_value());
  CHECK(!rep.identification->conjectural);
}

TEST_CASE("config validation") {
  RunConfig cfg;
  cfg.K = 10;
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg.K = 100;
  cfg.precision_digits = 50;
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg.precision_digits = 200;
  CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("pipeline errors carry machine-readable codes") {
  RunConfig cfg;
  cfg.K = 60;
  try {
    run_ra_rec_text("n+1", "[0]", "[1]", cfg);
    FAIL("expected parse error");
  } catch (const Error& e) {
    CHECK(std::string(e.code_name()) == "not-a-recurrence");
  }
  try {
    run_ra_rec_text("N^2-2*N-1", "[1,2,3]", "[0,1]", cfg);
    FAIL("expected arity error");
  } catch (const Error& e) {
    CHECK(std::string(e.code_name()) == "bad-argument");
  }
  try {
    IntegralParams params;
    params.log_a = Rational(1);
    run_ra_int(IntegralFamily::Log, params, cfg);
    FAIL("expected precondition error");
  } catch (const Error& e) {
    CHECK(std::string(e.code_name()) == "bad-argument");
  }
}

TEST_CASE("dictionary file extends identification") {
  std::string path = "/tmp/apery_test_dict.txt";
  {
    std::ofstream out(path);
    out << "# extra constants\n";
    out << "ln(7) "
           "1.9459101490553133051053527434431797296370847295818611884593901499375798627520692677"
           "876584985878715269930616942058511409117238 true\n";
  }
  ConstantDictionary dict = ConstantDictionary::defaults();
  dict.load_extra(path);
  const DictionaryEntry* e = dict.find("ln(7)");
  REQUIRE(e != nullptr);
  CHECK(e->irrationality_known);
  BigFloat x = BigFloat::ln_rational(Rational(7), 80) * BigFloat(Rational(3, 5), 80);
  auto id = identify_constant(x, dict);
  REQUIRE(id.has_value());
  CHECK(id->name == "(3/5)*ln(7)");
}
