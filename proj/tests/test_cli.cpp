#include "nilcone/cli.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>
#include <string>
#include <sys/wait.h>

using namespace nilcone;
using namespace nilcone::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cfg(const CliConfig& c) {
  std::ostringstream out, err;
  int code = run(c, out, err);
  return {code, out.str(), err.str()};
}

CliConfig cfg(Subcommand s, std::optional<int> n, std::optional<int> ell, Format f = Format::pretty) {
  CliConfig c;
  c.subcommand = s;
  c.n = n;
  c.ell = ell;
  c.format = f;
  return c;
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

// runs the built binary; returns exit status and stdout
Outcome exec(const std::string& args) {
  std::string cmd = std::string(NILCONE_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, "", ""};
  std::string out;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), got);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, ""};
}

}  // namespace

TEST(Cli, OrbitsTsvHasOneRowPerLabel) {
  auto r = run_cfg(cfg(Subcommand::orbits, 2, 2, Format::tsv));
  ASSERT_EQ(r.code, kOk);
  std::istringstream in(r.out);
  std::string line;
  std::size_t data = 0;
  std::getline(in, line);
  EXPECT_EQ(line, "lambda\tnu\tsummands\tpi1");
  while (std::getline(in, line))
    if (!line.empty() && line[0] != '#') ++data;
  EXPECT_EQ(data, 41u);
  EXPECT_NE(r.out.find("#totals\torbits=41\tpell=5"), std::string::npos);
}

TEST(Cli, OrbitsWithChiAddsFlags) {
  auto c = cfg(Subcommand::orbits, 2, 1, Format::tsv);
  c.chi = "1/2";
  auto r = run_cfg(c);
  ASSERT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("[]\t[2]\t0:1:(2)\tZ/2\ttrue\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("monodromic=3"), std::string::npos);
}

TEST(Cli, Pi1) {
  auto c = cfg(Subcommand::pi1, std::nullopt, 1);
  c.lambda = "[]";
  c.nu = "[2]";
  auto r = run_cfg(c);
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "Z/2\n");

  c.nu = "[1]";
  r = run_cfg(c);
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "1\n");

  c.n = 2;  // |nu| = 1 but n = 2
  r = run_cfg(c);
  EXPECT_EQ(r.code, kInputError);
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, SemisimpleVerdicts) {
  auto c = cfg(Subcommand::semisimple, 2, 1);
  c.chi = "1/2";
  auto r = run_cfg(c);
  EXPECT_EQ(r.code, kNotSemisimple);
  EXPECT_NE(r.out.find("(2)  -> 1"), std::string::npos) << r.out;

  c.chi = "1/5";
  EXPECT_EQ(run_cfg(c).code, kSemisimple);

  c.ell = 2;
  c.chi = "1/5,1/7";
  c.format = Format::json;
  r = run_cfg(c);
  EXPECT_EQ(r.code, kSemisimple);
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["simple_count"], 5);
  EXPECT_EQ(j["orbit_count"], 41);
}

TEST(Cli, SemisimpleFromSeedIsReproducible) {
  auto c = cfg(Subcommand::semisimple, 2, 2, Format::tsv);
  c.seed = 42;
  auto a = run_cfg(c), b = run_cfg(c);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.code, b.code);
  EXPECT_EQ(sample_character(3, 7), sample_character(3, 7));
}

TEST(Cli, Translate) {
  auto c = cfg(Subcommand::translate, std::nullopt, 2);
  c.kappa = "k00=1/3,k=1/4,-1/4";
  auto r = run_cfg(c);
  ASSERT_EQ(r.code, kOk);
  EXPECT_EQ(r.out.rfind("chi = 2/3,0\n", 0), 0u) << r.out;

  c.kappa.reset();
  c.chi = "2/3,0";
  c.format = Format::json;
  r = run_cfg(c);
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["kappa"]["k00"], "1/3");
  EXPECT_EQ(j["kappa"]["kappa"], Json::array({"1/4", "-1/4"}));
}

TEST(Cli, Hyperplanes) {
  auto r = run_cfg(cfg(Subcommand::hyperplanes, 2, 2, Format::tsv));
  ASSERT_EQ(r.code, kOk);
  EXPECT_EQ(count_lines(r.out), 6u);
  EXPECT_NE(r.out.find("(1,2)\tχ_0 + 2χ_1 ∈ Z"), std::string::npos);
}

TEST(Cli, Simples) {
  auto c = cfg(Subcommand::simples, 2, 1, Format::tsv);
  c.chi = "1/3";
  auto r = run_cfg(c);
  ASSERT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "lambda\tnu\n[2]\t[]\n[1,1]\t[]\n");
}

TEST(Cli, InputErrors) {
  auto missing_ell = cfg(Subcommand::orbits, 2, std::nullopt);
  EXPECT_EQ(run_cfg(missing_ell).code, kInputError);

  auto bad_ell = cfg(Subcommand::orbits, 2, 0);
  EXPECT_EQ(run_cfg(bad_ell).code, kInputError);

  auto both = cfg(Subcommand::semisimple, 2, 2);
  both.chi = "1/2,0";
  both.kappa = "k00=0,k=0,0";
  EXPECT_EQ(run_cfg(both).code, kInputError);

  auto wrong_len = cfg(Subcommand::semisimple, 2, 2);
  wrong_len.chi = "1/2";
  auto r = run_cfg(wrong_len);
  EXPECT_EQ(r.code, kInputError);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("error:"), std::string::npos);

  auto garbage = cfg(Subcommand::semisimple, 2, 1);
  garbage.chi = "1/0";
  EXPECT_EQ(run_cfg(garbage).code, kInputError);

  auto no_chi = cfg(Subcommand::semisimple, 2, 1);
  EXPECT_EQ(run_cfg(no_chi).code, kInputError);
}

TEST(Cli, OutputIsDeterministic) {
  for (auto f : {Format::pretty, Format::json, Format::tsv}) {
    auto c = cfg(Subcommand::orbits, 2, 3, f);
    c.chi = "1/2,1/3,0";
    EXPECT_EQ(run_cfg(c).out, run_cfg(c).out);
  }
}

TEST(CliBinary, ExitCodes) {
  EXPECT_EQ(exec("semisimple -n 2 -l 1 --chi 1/5").code, 0);
  EXPECT_EQ(exec("semisimple -n 2 -l 1 --chi 1/2").code, 1);
  EXPECT_EQ(exec("semisimple -n 2 -l 1 --chi x").code, 2);
  EXPECT_EQ(exec("orbits -n 2 -l 2 -f yaml").code, 2);
  EXPECT_EQ(exec("frobnicate").code, 2);
  EXPECT_EQ(exec("").code, 2);
}

TEST(CliBinary, Output) {
  auto r = exec("translate -l 2 --kappa k00=1/3,k=1/4,-1/4");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("chi = 2/3,0\n", 0), 0u);
  auto o = exec("orbits -n 2 -l 2 -f json");
  EXPECT_EQ(Json::parse(o.out)["totals"]["orbits"], 41);
}
