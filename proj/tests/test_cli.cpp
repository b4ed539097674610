#include <gtest/gtest.h>

#include <json.hpp>

#include "hkgeom_cli/cli.hpp"

using hkgeom::cli::run;
using Json = nlohmann::json;

namespace {

std::string data(const std::string& name) { return std::string(HKGEOM_TEST_DATA) + "/" + name; }

Json json_of(const hkgeom::cli::Outcome& o) { return Json::parse(o.out); }

}  // namespace

TEST(Cli, CatalogListsAndPrints) {
  auto list = run({"catalog"});
  EXPECT_EQ(list.exit_code, 0);
  for (const char* name : {"complete-quadrangle", "hesse", "dual-hesse"}) EXPECT_NE(list.out.find(name), std::string::npos);
  auto cq = run({"--json", "catalog", "complete-quadrangle"});
  ASSERT_EQ(cq.exit_code, 0);
  auto j = json_of(cq);
  EXPECT_EQ(j.at("configuration").at("lines").size(), 6u);
  EXPECT_EQ(run({"catalog", "nonexistent"}).exit_code, 1);
}

TEST(Cli, UsageErrorsExitOne) {
  EXPECT_EQ(run({}).exit_code, 1);
  EXPECT_EQ(run({"frobnicate"}).exit_code, 1);
  EXPECT_EQ(run({"hk", "smoothness", "--n", "3"}).exit_code, 1);
  EXPECT_EQ(run({"hk", "smoothness", "--n", "3", "--prime", "11", "--trials", "5", "--seed", "1"}).exit_code, 1);
  EXPECT_EQ(run({"delpezzo", "verify", "--degree", "3"}).exit_code, 1);
  EXPECT_EQ(run({"delpezzo", "verify", "--degree", "4", "--lambda", "1", "--mu", "1"}).exit_code, 1);
  EXPECT_EQ(run({"kummer", "certify", "complete-quadrangle", "--n", "2"}).exit_code, 1);
  EXPECT_EQ(run({"config", "analyze", data("missing.json")}).exit_code, 1);
  EXPECT_EQ(run({"config", "analyze", data("malformed.json")}).exit_code, 1);
  EXPECT_EQ(run({"config", "analyze", data("truncated.json")}).exit_code, 1);
  EXPECT_EQ(run({"--help"}).exit_code, 0);
}

TEST(Cli, ConfigFilesParse) {
  auto a = run({"--json", "config", "analyze", data("complete_quadrangle.json")});
  ASSERT_EQ(a.exit_code, 0) << a.err;
  auto b = run({"--json", "config", "analyze", "complete-quadrangle"});
  ASSERT_EQ(b.exit_code, 0);
  EXPECT_EQ(json_of(a), json_of(b));
  auto c = run({"--json", "config", "compare", data("ceva3.json"), "dual-hesse"});
  ASSERT_EQ(c.exit_code, 0) << c.err;
  EXPECT_TRUE(json_of(c).at("same_incidence_type").get<bool>());
  auto d = run({"--json", "config", "compare", "hesse", "dual-hesse"});
  ASSERT_EQ(d.exit_code, 0);
  EXPECT_FALSE(json_of(d).at("same_incidence_type").get<bool>());
}

TEST(Cli, ExtendClassifies) {
  auto e = run({"--json", "config", "extend", "complete-quadrangle", "--line", "1,1,-1"});
  ASSERT_EQ(e.exit_code, 0) << e.err;
  auto text = e.out;
  EXPECT_NE(text.find("\"a\""), std::string::npos);
  EXPECT_EQ(run({"config", "extend", "complete-quadrangle", "--line", "0,1,-1"}).exit_code, 1);
  EXPECT_EQ(run({"config", "extend", "complete-quadrangle", "--line", "1,x,2"}).exit_code, 1);
}

TEST(Cli, KummerCertifyExitCodes) {
  auto ok = run({"--json", "kummer", "certify", "complete-quadrangle", "--n", "3"});
  ASSERT_EQ(ok.exit_code, 0) << ok.err;
  auto j = json_of(ok);
  EXPECT_TRUE(j.at("contained").get<bool>());
  EXPECT_EQ(j.at("dims").at("ambient"), 159);
  EXPECT_EQ(j.at("dims").at("T"), 35);
  EXPECT_EQ(j.at("dims").at("E"), 35);
  EXPECT_EQ(run({"kummer", "certify", "complete-quadrangle", "--n", "3", "--mu-sign", "1"}).exit_code, 2);
  EXPECT_EQ(run({"kummer", "certify", "complete-quadrangle", "--n", "3", "--max-unknowns", "10"}).exit_code, 1);
  auto eq = run({"--json", "kummer", "equations", "complete-quadrangle", "--n", "5"});
  ASSERT_EQ(eq.exit_code, 0);
  EXPECT_EQ(json_of(eq).at("equations").size(), 3u);
}

TEST(Cli, DelPezzoAndHkVerify) {
  for (const char* deg : {"8", "7", "6", "5", "4"}) {
    auto r = run({"--json", "delpezzo", "verify", "--degree", deg});
    EXPECT_EQ(r.exit_code, 0) << deg << r.err;
    EXPECT_TRUE(json_of(r).at("all_passed").get<bool>()) << deg;
  }
  EXPECT_EQ(run({"delpezzo", "present", "--degree", "5", "--variant", "projection"}).exit_code, 0);
  EXPECT_EQ(run({"delpezzo", "present", "--degree", "4", "--lambda", "2", "--mu", "3"}).exit_code, 0);
  EXPECT_EQ(run({"hk", "verify", "--n", "3"}).exit_code, 0);
  EXPECT_EQ(run({"hk", "present", "--n", "2"}).exit_code, 0);
}

TEST(Cli, SmoothnessJsonFields) {
  auto r = run({"--json", "hk", "smoothness", "--n", "3", "--prime", "7", "--trials", "20", "--seed", "1"});
  ASSERT_EQ(r.exit_code, 0) << r.err;
  auto j = json_of(r);
  for (const char* key : {"n", "p", "trials", "seed", "skipped", "rank_histogram", "expected_rank", "method", "kind"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j.at("kind"), "corroboration");
  EXPECT_EQ(j.at("rank_histogram").at("6"), 20);
}

TEST(Cli, OutputIsDeterministic) {
  std::vector<std::string> args{"--json", "hk", "smoothness", "--n", "5", "--prime", "11", "--trials", "40", "--seed", "9"};
  auto a = run(args);
  auto b = run(args);
  EXPECT_EQ(a.out, b.out);
  auto threaded = args;
  threaded.insert(threaded.begin(), {"--threads", "4"});
  EXPECT_EQ(run(threaded).out, a.out);
  std::vector<std::string> cert{"--json", "kummer", "certify", "complete-quadrangle", "--n", "3"};
  auto c = run(cert);
  cert.insert(cert.begin(), {"--threads", "3"});
  EXPECT_EQ(run(cert).out, c.out);
}
