#include <gtest/gtest.h>

#include "padicvol/io.hpp"
#include "padicvol/verify.hpp"

using namespace padicvol;

TEST(VerifyConfig, Guardrails) {
  VerifyConfig c;
  EXPECT_NO_THROW(c.validate());
  auto bad = [](auto mutate) {
    VerifyConfig c;
    mutate(c);
    return c;
  };
  EXPECT_THROW(run_verify(bad([](VerifyConfig& c) { c.suites = {"nosuch"}; })), ConfigError);
  EXPECT_THROW(run_verify(bad([](VerifyConfig& c) { c.suites = {}; })), ConfigError);
  EXPECT_THROW(run_verify(bad([](VerifyConfig& c) { c.n_max = 5; })), ConfigError);
  EXPECT_THROW(run_verify(bad([](VerifyConfig& c) { c.x_max = 0; })), ConfigError);
  EXPECT_THROW(run_verify(bad([](VerifyConfig& c) { c.seeds = 101; })), ConfigError);
  EXPECT_THROW(run_verify(bad([](VerifyConfig& c) { c.primes = {4}; })), ConfigError);
  EXPECT_THROW(run_verify(bad([](VerifyConfig& c) { c.primes = {11}; })), ConfigError);
}

TEST(RunVerify, VolumesSmall) {
  VerifyConfig c;
  c.suites = {"volumes"};
  c.n_max = 2;
  c.x_max = 4;
  const VerifyReport r = run_verify(c);
  ASSERT_EQ(r.suites.size(), 1u);
  EXPECT_EQ(r.suites[0].suite, "volumes");
  EXPECT_EQ(r.suites[0].failed(), 0);
  EXPECT_GT(r.suites[0].passed(), 0);
  EXPECT_EQ(r.exit_status(), 0);
}

TEST(RunVerify, DeterministicReport) {
  VerifyConfig c;
  c.suites = {"lfactors", "qring", "invariants"};
  c.seeds = 3;
  const std::string a = io::encode(run_verify(c)).dump();
  const std::string b = io::encode(run_verify(c)).dump();
  EXPECT_EQ(a, b);
}

TEST(RunVerify, CanonicalSuiteOrder) {
  VerifyConfig c;
  c.suites = {"branching", "qring"};
  c.seeds = 1;
  const VerifyReport r = run_verify(c);
  ASSERT_EQ(r.suites.size(), 2u);
  EXPECT_EQ(r.suites[0].suite, "qring");
  EXPECT_EQ(r.suites[1].suite, "branching");
}

TEST(VerifyReport, FailureStatus) {
  VerifyReport r;
  r.suites.push_back({"qring", {{"p", 3, 1, "x=1"}}});
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.exit_status(), 1);
  EXPECT_EQ(io::encode(r)["suites"]["qring"]["counterexamples"][0]["input"], "x=1");
}

TEST(Substream, IndependentOfOrder) {
  Rng a = substream(5, "x/y"), b = substream(5, "x/y"), c = substream(5, "x/z");
  EXPECT_EQ(a(), b());
  EXPECT_NE(substream(5, "x/y")(), c());
}

TEST(Io, ProfileRoundTrip) {
  const auto j = nlohmann::json::parse(
      R"({"n":1,"N":1,"entries":[{"first":["inf"],"second":["inf"],"value":1},{"first":["inf"],"second":[-1],"value":"1/2"}]})");
  const OrbitalProfile phi = io::decode_profile(j);
  EXPECT_EQ(phi.at({std::nullopt}, {-1}), Rational(1, 2));
  EXPECT_EQ(io::decode_profile(io::encode(phi)).values(), phi.values());
  EXPECT_THROW(io::decode_profile(nlohmann::json::parse(R"({"n":1})")), DomainError);
}
