#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "polyloc/cli.hpp"
#include "polyloc/verify.hpp"

using namespace polyloc;
using namespace testing_helpers;

namespace {

const std::filesystem::path kFixtures{POLYLOC_FIXTURE_DIR};

std::string fixture(const char* name) { return (kFixtures / name).string(); }

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

cli::RunResult run_cmd(const std::string& command, cli::RunConfig cfg = {}) {
    cfg.command = command;
    return cli::run(cfg);
}

void expect_parse_error(const std::string& text, const std::string& needle) {
    try {
        load_polynomial(text);
        FAIL() << "expected ParseError for " << text;
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find(needle), std::string::npos) << e.what();
    }
}

}  // namespace

TEST(PolynomialFormat, RoundTripIsBitIdentical) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const MatrixPolynomial p = random_gaussian_poly(1 + seed % 4, seed % 4, seed);
        const std::string text = save_polynomial(p);
        const MatrixPolynomial back = load_polynomial(text);
        EXPECT_TRUE(back == p);
        EXPECT_EQ(save_polynomial(back), text);
    }
    const std::string q2 = read_file(fixture("q2.json"));
    EXPECT_EQ(save_polynomial(load_polynomial(q2)), q2);
    EXPECT_TRUE(load_polynomial(q2) == extremal_sup_witness(2));
}

TEST(PolynomialFormat, ErrorsNameTheField) {
    expect_parse_error("[1,2]", "document");
    expect_parse_error("{\"m\":0,\"coeffs\":[]}", "n: missing");
    expect_parse_error("{\"n\":0,\"m\":0,\"coeffs\":[]}", "n:");
    expect_parse_error("{\"n\":1,\"m\":1,\"coeffs\":[[[[1,0]]]]}", "coeffs: expected m+1 = 2");
    expect_parse_error("{\"n\":2,\"m\":0,\"coeffs\":[[[[1,0],[0,0]]]]}", "coeffs[0]: expected 2 rows");
    expect_parse_error("{\"n\":1,\"m\":1,\"coeffs\":[[[[1,0]]],[[[1,0,3]]]]}", "coeffs[1][0][0]");
    expect_parse_error("{\"n\":1,\"m\":1,\"coeffs\":[[[[1,0]]],[[[0,0]]]]}", "coeffs[1]: leading");
    expect_parse_error(read_file(fixture("malformed.json")), "coeffs[1][1][1]");
    expect_parse_error("{not json", "document");
}

TEST(Cli, EigFixture) {
    cli::RunConfig cfg;
    cfg.input = fixture("q2.json");
    const auto res = run_cmd("eig", cfg);
    ASSERT_EQ(res.status, cli::kPass) << res.message;
    const Json doc = Json::parse(res.document);
    EXPECT_EQ(doc["command"], "eig");
    ASSERT_EQ(doc["instances"].size(), 1u);
    std::vector<double> mod = doc["instances"][0]["moduli"].get<std::vector<double>>();
    std::sort(mod.begin(), mod.end());
    ASSERT_EQ(mod.size(), 4u);
    EXPECT_NEAR(mod[0], 0.6180339887, 1e-8);
    EXPECT_NEAR(mod[1], 1.0, 1e-8);
    EXPECT_NEAR(mod[3], 1.6180339887, 1e-8);
    EXPECT_TRUE(doc["summary"]["pass"].get<bool>());
    EXPECT_FALSE(doc["summary"].contains("runtime_seconds"));
}

TEST(Cli, ExitStatusContract) {
    cli::RunConfig ok;
    ok.input = fixture("q2.json");
    EXPECT_EQ(run_cmd("verify ds", ok).status, cli::kPass);

    cli::RunConfig fam;
    fam.input = fixture("not_in_d.json");
    const auto violated = run_cmd("verify ds", fam);
    EXPECT_EQ(violated.status, cli::kViolation);
    EXPECT_FALSE(Json::parse(violated.document)["summary"]["pass"].get<bool>());

    cli::RunConfig bad;
    bad.input = fixture("malformed.json");
    const auto parse = run_cmd("eig", bad);
    EXPECT_EQ(parse.status, cli::kUsage);
    EXPECT_NE(parse.message.find("coeffs[1][1][1]"), std::string::npos);

    cli::RunConfig sing;
    sing.input = fixture("singular_leading.json");
    EXPECT_EQ(run_cmd("eig", sing).status, cli::kUsage);

    cli::RunConfig strict;
    strict.input = fixture("gaussian.json");
    strict.tol = 1e-300;
    EXPECT_EQ(run_cmd("eig", strict).status, cli::kSolverFailure);

    EXPECT_EQ(run_cmd("no-such-command").status, cli::kUsage);
    EXPECT_EQ(run_cmd("eig").status, cli::kUsage);
    EXPECT_EQ(run_cmd("extremal inf").status, cli::kUsage);
    cli::RunConfig out_of_domain;
    out_of_domain.r = 0.3;
    EXPECT_EQ(run_cmd("extremal inf", out_of_domain).status, cli::kUsage);
}

TEST(Cli, VerifyDsCampaignIsDeterministic) {
    cli::RunConfig cfg;
    cfg.n = 3;
    cfg.m = 3;
    cfg.trials = 100;
    cfg.seed = 42;
    const auto a = run_cmd("verify ds", cfg);
    const auto b = run_cmd("verify ds", cfg);
    ASSERT_EQ(a.status, cli::kPass) << a.message;
    EXPECT_EQ(a.document, b.document);
    const Json doc = Json::parse(a.document);
    EXPECT_EQ(doc["instances"].size(), 100u);
    EXPECT_GT(doc["summary"]["worst_margins"]["inner"].get<double>(), 0.0);
    EXPECT_GT(doc["summary"]["worst_margins"]["outer"].get<double>(), 0.0);
    EXPECT_EQ(doc["config"]["seed"], 42);
}

TEST(Cli, OtherCommandsPass) {
    cli::RunConfig ms;
    ms.n = 50;
    const auto mass = run_cmd("example mass-spring", ms);
    ASSERT_EQ(mass.status, cli::kPass) << mass.message;
    const Json md = Json::parse(mass.document);
    EXPECT_LT(md["instances"][0]["max_modulus"].get<double>(), 50.0);
    EXPECT_LE(md["instances"][0]["max_modulus"].get<double>(), 51.0);
    EXPECT_EQ(md["instances"][0]["norm_bound"].get<double>(), 51.0);
    EXPECT_LT(md["instances"][0]["r_eff"].get<double>(), 50.0);

    cli::RunConfig sc;
    sc.trials = 5;
    sc.r = 2.0;
    EXPECT_EQ(run_cmd("verify schur", sc).status, cli::kPass);
    EXPECT_EQ(run_cmd("verify unit-circle", sc).status, cli::kPass);

    cli::RunConfig inf;
    inf.r = 0.6;
    const auto w = run_cmd("extremal inf", inf);
    ASSERT_EQ(w.status, cli::kPass);
    EXPECT_EQ(Json::parse(w.document)["instances"][0]["d"], 3);

    cli::RunConfig sup;
    sup.m = 12;
    EXPECT_EQ(run_cmd("extremal sup", sup).status, cli::kPass);

    cli::RunConfig ss;
    ss.m = 5;
    ss.n = 10;
    EXPECT_EQ(run_cmd("extremal schur-sup", ss).status, cli::kPass);

    cli::RunConfig ce;
    ce.n = 8;
    const auto counter = run_cmd("counterexample", ce);
    ASSERT_EQ(counter.status, cli::kPass);
    EXPECT_FALSE(Json::parse(counter.document)["instances"][0]["commuting"].get<bool>());

    cli::RunConfig cb;
    cb.input = fixture("scalar_quadratic.json");
    const auto cauchy = run_cmd("bounds cauchy", cb);
    ASSERT_EQ(cauchy.status, cli::kPass);
    EXPECT_EQ(Json::parse(cauchy.document)["instances"][0]["bound"].get<double>(), 41.0);

    EXPECT_EQ(run_cmd("sweep ds").status, cli::kPass);
    cli::RunConfig sw;
    sw.trials = 3;
    EXPECT_EQ(run_cmd("sweep schur", sw).status, cli::kPass);
}

TEST(Cli, Formats) {
    cli::RunConfig cfg;
    cfg.input = fixture("q2.json");
    cfg.format = cli::OutputFormat::CsvModuli;
    const auto csv = run_cmd("eig", cfg);
    ASSERT_EQ(csv.status, cli::kPass);
    EXPECT_EQ(csv.document.rfind("instance,index,re,im,modulus\n", 0), 0u);
    EXPECT_EQ(std::count(csv.document.begin(), csv.document.end(), '\n'), 5);

    cli::RunConfig gen;
    gen.m = 2;
    gen.format = cli::OutputFormat::Polynomial;
    const auto poly = run_cmd("extremal sup", gen);
    ASSERT_EQ(poly.status, cli::kPass);
    EXPECT_EQ(poly.document, read_file(fixture("q2.json")));

    cfg.format = cli::OutputFormat::Polynomial;
    EXPECT_EQ(run_cmd("eig", cfg).status, cli::kUsage);

    cli::RunConfig timed;
    timed.input = fixture("q2.json");
    timed.timing = true;
    EXPECT_TRUE(Json::parse(run_cmd("eig", timed).document)["summary"].contains("runtime_seconds"));
}
