#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

std::string Fixture(const std::string& name) { return std::string(NFGD_FIXTURE_DIR) + "/" + name; }

Run Cli(const std::string& args) {
  std::string command = std::string(NFGD_CLI) + " " + args + " 2>&1";
  Run run;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer;
  std::size_t n;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) run.out.append(buffer.data(), n);
  int status = pclose(pipe);
  run.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return run;
}

std::filesystem::path ScratchDir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("nfgd_cli_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

std::string Slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool Has(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("decompose matching pennies") {
  auto run = Cli("decompose " + Fixture("matching_pennies.game"));
  CHECK(run.code == 0);
  CHECK(Has(run.out, "norm2 nonstrategic 0"));
  CHECK(Has(run.out, "norm2 potential 0"));
  CHECK(Has(run.out, "norm2 harmonic 16"));
  CHECK(Has(run.out, "# harmonic component\nplayer row s t\nplayer col s t\npayoff row 1 -1 -1 1\npayoff col -1 1 1 -1"));
}

TEST_CASE("decompose writes files with --out") {
  auto dir = ScratchDir("decompose");
  auto run = Cli("decompose " + Fixture("strategy_dependent_scaling.game") + " --out " + dir.string());
  CHECK(run.code == 0);
  for (const char* name : {"nonstrategic.game", "potential.game", "harmonic.game", "phi.game", "report.txt"}) {
    CAPTURE(name);
    CHECK(std::filesystem::exists(dir / name));
  }
  auto harmonic = Cli("classify " + (dir / "harmonic.game").string());
  CHECK(harmonic.code == 0);
  CHECK(Has(harmonic.out, "harmonic yes"));
  auto potential = Cli("classify " + (dir / "potential.game").string());
  CHECK(Has(potential.out, "gamma-potential yes"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("check-eq on a named profile") {
  auto run = Cli("check-eq " + Fixture("matching_pennies.game") + " --profile uniform");
  CHECK(run.code == 0);
  CHECK(Has(run.out, "epsilon 0"));
  CHECK(Has(run.out, "nash yes"));
  auto missing = Cli("check-eq " + Fixture("matching_pennies.game") + " --profile nope");
  CHECK(missing.code == 1);
}

TEST_CASE("float mode agrees with exact classification") {
  auto plain = Cli("--float classify " + Fixture("column_scaled_pennies.game"));
  CHECK(plain.code == 0);
  CHECK(Has(plain.out, "harmonic no"));
  auto run = Cli("--float classify " + Fixture("column_scaled_pennies.game") + " --gamma \"row 1/2 1\"");
  CHECK(run.code == 0);
  CHECK(Has(run.out, "harmonic yes"));
  CHECK(Has(Cli("classify " + Fixture("column_scaled_pennies.game") + " --gamma \"row 1/2 1\"").out, "harmonic yes"));
}

TEST_CASE("parameter overrides on the command line") {
  auto lopsided = Cli("classify " + Fixture("matching_pennies.game") + " --gamma \"row 2 2\"");
  CHECK(lopsided.code == 0);
  CHECK(Has(lopsided.out, "harmonic no"));
  auto run = Cli("classify " + Fixture("matching_pennies.game") + " --gamma \"row 2 2\" --gamma \"col 2 2\"");
  CHECK(run.code == 0);
  CHECK(Has(run.out, "harmonic yes"));
  auto bad = Cli("classify " + Fixture("matching_pennies.game") + " --mu \"row 0 1\"");
  CHECK(bad.code == 1);
  CHECK(Has(bad.out, "nonpositive"));
}

TEST_CASE("input errors exit with status 1") {
  CHECK(Cli("decompose /nonexistent/file.game").code == 1);
  CHECK(Cli("").code == 1);
  CHECK(Cli("--exact --float classify " + Fixture("matching_pennies.game")).code == 1);
  auto dir = ScratchDir("bad");
  std::ofstream(dir / "bad.game") << "nfg-decomp 1\nplayer row s t\nplayer col s t\npayoff row 1 2 x 4\n";
  auto run = Cli("classify " + (dir / "bad.game").string());
  CHECK(run.code == 1);
  CHECK(Has(run.out, "line 4"));
  CHECK(Cli("verify no-such-law").code == 1);
  std::filesystem::remove_all(dir);
}

TEST_CASE("transform operations") {
  auto reduce = Cli("transform " + Fixture("two_duplicates.game") + " --op reduce --player row --remove s0 --keep s1");
  CHECK(reduce.code == 0);
  CHECK(Has(reduce.out, "player row s1 t"));
  CHECK(Has(reduce.out, "mu row 2 1"));
  CHECK(Has(reduce.out, "profile uniform 2/3 1/3 | 1/3 1/3 1/3"));

  auto scale = Cli("transform " + Fixture("strategy_dependent_scaling.game") +
                   " --op scale --beta \"generator row 1 3\" --beta \"generator col 2 1\"");
  CHECK(scale.code == 0);
  CHECK(Has(scale.out, "payoff row 8 -3 -8 3"));

  auto extend = Cli("transform " + Fixture("matching_pennies.game") +
                    " --op extend --player row --strategy t --label t2 --lambda 1/4");
  CHECK(extend.code == 0);
  CHECK(Has(extend.out, "player row s t t2"));
  CHECK(Has(extend.out, "mu row 1 3/4 1/4"));

  auto permute = Cli("transform " + Fixture("matching_pennies.game") + " --op permute --player col --order t --order s");
  CHECK(permute.code == 0);
  CHECK(Has(permute.out, "payoff row -1 1 1 -1"));

  auto redundant = Cli("transform " + Fixture("redundant_scaling.game") +
                       " --op reduce-redundant --player row --remove r --alpha \"1/3 2/3\"");
  CHECK(redundant.code == 0);
  CHECK(Has(redundant.out, "player row s t"));

  auto dir = ScratchDir("translate");
  std::ofstream(dir / "ns.game") << "nfg-decomp 1\nplayer row s t\nplayer col s t\n"
                                    "payoff row 5 7 5 7\npayoff col 2 2 3 3\n";
  auto translate = Cli("transform " + Fixture("matching_pennies.game") + " --op translate --translation " +
                       (dir / "ns.game").string() + " --out " + (dir / "out.game").string());
  CHECK(translate.code == 0);
  CHECK(Has(Slurp(dir / "out.game"), "payoff row 6 6 4 8"));
  std::ofstream(dir / "strategic.game") << "nfg-decomp 1\nplayer row s t\nplayer col s t\n"
                                           "payoff row 1 0 0 0\npayoff col 0 0 0 0\n";
  CHECK(Cli("transform " + Fixture("matching_pennies.game") + " --op translate --translation " +
            (dir / "strategic.game").string()).code == 1);
  std::filesystem::remove_all(dir);

  auto precondition = Cli("transform " + Fixture("matching_pennies.game") + " --op reduce --player row --remove s --keep t");
  CHECK(precondition.code == 1);
}

TEST_CASE("closest potential") {
  auto run = Cli("closest-potential " + Fixture("matching_pennies.game"));
  CHECK(run.code == 0);
  CHECK(Has(run.out, "32"));
}

TEST_CASE("verify passes and is deterministic") {
  auto first = Cli("verify scale --trials 100 --seed 7");
  CHECK(first.code == 0);
  CHECK(Has(first.out, "law scale: pass (100/100 trials, seed 7, exact)"));
  auto second = Cli("verify scale --trials 100 --seed 7");
  CHECK(first.out == second.out);
  auto global = Cli("--seed 7 verify scale --trials 100");
  CHECK(global.out == first.out);
  auto fl = Cli("--float verify orthogonality --trials 20 --seed 2");
  CHECK(fl.code == 0);
  CHECK(Has(fl.out, "float"));
}

TEST_CASE("replay of a counterexample document") {
  auto dir = ScratchDir("replay");
  std::ofstream(dir / "bad.game") << Slurp(Fixture("matching_pennies.game"))
                                  << "# law reduce\n# reduce row remove s keep t\n";
  auto bad = Cli("verify reduce --replay " + (dir / "bad.game").string());
  CHECK(bad.code == 2);
  CHECK(Has(bad.out, "FAIL"));
  std::ofstream(dir / "good.game") << Slurp(Fixture("duplicated_pennies.game"))
                                   << "# law reduce\n# reduce row remove t1 keep t0\n";
  auto good = Cli("verify reduce --replay " + (dir / "good.game").string());
  CHECK(good.code == 0);
  CHECK(Cli("verify reduce --replay " + Fixture("matching_pennies.game")).code == 1);
  std::filesystem::remove_all(dir);
}
