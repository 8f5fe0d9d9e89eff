// Exercises the installed binary end to end; the binary path arrives in the
// LMC_BIN environment variable (wired up in CMakeLists).
#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

std::string binary() {
  const char* p = std::getenv("LMC_BIN");
  REQUIRE(p != nullptr);
  return p;
}

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = binary() + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  RunResult r;
  char buf[512];
  while (fgets(buf, sizeof buf, p)) r.out += buf;
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream f(path);
  REQUIRE(f.good());
  f << body;
}

}  // namespace

TEST_CASE("parse prints the canonical form and flags bad input") {
  RunResult r = run("parse \"( x o e )|-(x * 1)\"");
  REQUIRE(r.code == 0);
  REQUIRE(r.out == "(x o e) |- (x * 1)\n");
  REQUIRE(run("parse \"dia box x\" --kind formula").code == 0);
  REQUIRE(run("parse \"(x &\"").code == 1);
  REQUIRE(run("parse").code == 2);  // missing argument
  REQUIRE(run("frobnicate").code == 2);
}

TEST_CASE("prove, emit and re-check a derivation") {
  RunResult r = run("prove \"dia box x |- x\" --emit /tmp/lmc_cli_test.json");
  REQUIRE(r.code == 0);
  REQUIRE(r.out.find("proved:") == 0);

  RunResult c = run("check /tmp/lmc_cli_test.json");
  REQUIRE(c.code == 0);
  REQUIRE(c.out.find("ok: dia box x |- x") == 0);

  // Corrupt the stored conclusion: the checker reports the node path.
  std::ifstream in("/tmp/lmc_cli_test.json");
  std::string body((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  auto at = body.find("dia box x |- x");
  REQUIRE(at != std::string::npos);
  body.replace(at, 14, "dia box x |- y");
  write_file("/tmp/lmc_cli_bad.json", body);
  RunResult bad = run("check /tmp/lmc_cli_bad.json");
  REQUIRE(bad.code == 1);
  REQUIRE(bad.out.find("invalid at node [") != std::string::npos);

  REQUIRE(run("check /no/such/file.json").code == 1);
}

TEST_CASE("prove failures and budget flags") {
  REQUIRE(run("prove \"dia x |- x\"").code == 1);
  REQUIRE(run("prove \"dia dia x == dia x\"").code == 0);  // both directions
  // A starved budget gives up even on a theorem.
  RunResult starved = run("prove \"dia (x * y) |- (dia x * dia y)\" --nodes 5");
  REQUIRE(starved.code == 1);
  REQUIRE(starved.out.find("gave up") != std::string::npos);
  REQUIRE(run("prove \"x |- dia x\" --depth 6 --capc 0 --tlimit 2 --no-focus").code == 0);
}

TEST_CASE("eliminate removes the cut from a saved derivation") {
  // A derivation ending in cut, written by hand: x |- dia x into dia x |- dia dia x.
  write_file("/tmp/lmc_cli_cut.json", R"({
    "rule": "cut", "ctx": [], "conclusion": "x |- dia dia x",
    "premises": [
      {"rule": "T", "ctx": [], "conclusion": "x |- dia x", "premises": [
        {"rule": "diaR", "ctx": [], "conclusion": "<x> |- dia x", "premises": [
          {"rule": "init", "aux_formula": "x", "conclusion": "x |- x",
           "premises": []}]}]},
      {"rule": "T", "ctx": [], "conclusion": "dia x |- dia dia x", "premises": [
        {"rule": "diaR", "ctx": [], "conclusion": "<dia x> |- dia dia x", "premises": [
          {"rule": "init", "aux_formula": "dia x", "conclusion": "dia x |- dia x",
           "premises": []}]}]}
    ]})");
  RunResult r = run("eliminate /tmp/lmc_cli_cut.json --trace --emit /tmp/lmc_cli_out.json");
  REQUIRE(r.code == 0);
  REQUIRE(r.out.find("eliminated: x |- dia dia x") != std::string::npos);
  REQUIRE(r.out.find("eliminate mix") != std::string::npos);
  RunResult c = run("check /tmp/lmc_cli_out.json");
  REQUIRE(c.code == 0);
}

TEST_CASE("eval and soundness report over models") {
  REQUIRE(run("eval \"x <= dia x\" --model truncated:a:2").code == 0);
  REQUIRE(run("eval \"dia 1 <= 1\" --model z2-total").code == 1);
  REQUIRE(run("eval \"dia 1 <= 1\" --model z2-discrete").code == 0);
  RunResult r = run("eval \"dia x == x\" --model truncated:a:1");
  REQUIRE(r.code == 1);
  REQUIRE(r.out.find("fails") != std::string::npos);

  REQUIRE(run("soundness --model truncated:a:1 --goals 60 --seed 7 --jobs 2").code == 0);
}

TEST_CASE("countermodel search exit codes") {
  RunResult found = run("countermodel \"dia 1 |- 1\" --max-size 2 --max-L 1");
  REQUIRE(found.code == 1);
  REQUIRE(found.out.find("countermodel for") == 0);
  RunResult none = run("countermodel \"x |- dia x\" --max-size 2 --max-L 1");
  REQUIRE(none.code == 0);
  REQUIRE(none.out.find("no countermodel") == 0);
}

TEST_CASE("traces subcommands") {
  RunResult e = run("traces enumerate --max-len 2 --rooted --strict");
  REQUIRE(e.code == 0);
  REQUIRE(e.out.find("(s0,conn)(s1,snd)") != std::string::npos);

  write_file("/tmp/lmc_cli_traces.txt",
             "# protocol runs\n"
             "eps\n"
             "(s0,conn)\n"
             "(s0,conn)(s1,snd)\n");
  RunResult c = run("traces classify /tmp/lmc_cli_traces.txt --max-len 2");
  REQUIRE(c.code == 0);
  REQUIRE(c.out.find("safety: yes") == 0);
  REQUIRE(c.out.find("agrees") != std::string::npos);

  RunResult p = run("traces policy /tmp/lmc_cli_traces.txt");
  REQUIRE(p.code == 0);
  write_file("/tmp/lmc_cli_badtrace.txt", "(s2,ack)(s4,end)\n");
  REQUIRE(run("traces policy /tmp/lmc_cli_badtrace.txt").code == 1);
}

TEST_CASE("algebra subcommands") {
  RunResult r = run("algebra rdp ab ba abb");
  REQUIRE(r.code == 0);
  REQUIRE(r.out == "(ab, b)\n");
  REQUIRE(run("algebra rdp ab ba abbb").code == 1);
  RunResult all = run("algebra rdp aa aa aaa --all");
  REQUIRE(all.code == 0);
  REQUIRE(all.out.find("(a, aa)") != std::string::npos);
  REQUIRE(all.out.find("(aa, a)") != std::string::npos);

  RunResult cz = run("algebra classify --monoid z2");
  REQUIRE(cz.code == 0);
  REQUIRE(cz.out.find("cancellative: yes") != std::string::npos);
  REQUIRE(cz.out.find("conical: no") != std::string::npos);

  REQUIRE(run("algebra endz --lo -100 --hi 100").code == 0);
  REQUIRE(run("algebra endz --lo -5 --hi 0").code == 1);
}
