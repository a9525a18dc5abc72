#include "grossone/app.hpp"

#include <json.hpp>

#include <doctest.h>

#include <random>
#include <sstream>

using namespace grossone;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args, const std::string& input = "") {
  std::vector<const char*> argv{"grosscalc"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(input);
  std::ostringstream out, err;
  int status = run_cli(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("eval subcommand") {
  auto r = cli({"eval", "(8/9)^(g1-1)"});
  CHECK(r.status == 0);
  CHECK(r.out == "(8/9)^(①-1)\n");
  CHECK(cli({"--ascii", "eval", "g1 + 1"}).out == "g1+1\n");
  CHECK(cli({"eval", "g1+1", "--ascii"}).out == "g1+1\n");
}

TEST_CASE("exit codes") {
  CHECK(cli({"eval", "(8/9)^g1 + g1"}).status == 1);
  auto syntax = cli({"eval", "1 +* 2"});
  CHECK(syntax.status == 2);
  CHECK(syntax.err.find("SyntaxError at byte 3") != std::string::npos);
  CHECK(cli({"carpet", "3", "2"}).status == 1);
  CHECK(cli({"nonsense"}).status == 2);
  CHECK(cli({"--help"}).status == 0);
}

TEST_CASE("fractal subcommands") {
  auto r = cli({"carpet", "1", "g1"});
  CHECK(r.out == "carpet(k=1, n=①): count=8^(①-1) size=(1/3)^(①-1) measure=(8/9)^(①-1)\n");
  auto j = nlohmann::json::parse(cli({"--json", "sponge", "1", "g1-1"}).out);
  CHECK(j["fractal"] == "sponge");
  CHECK(j["k"]["const"] == 1);
  CHECK(j["n"]["gross"] == 1);
  CHECK(j["n"]["const"] == -1);
  CHECK(j["measure"]["text"] == "(20/27)^(①-2)");
  CHECK(j["measure"]["factors"].size() == 3);
  CHECK(j["count"]["text"] == "20^(①-2)");
  CHECK(j["size"]["text"] == "(1/3)^(①-2)");
  CHECK(cli({"cantor", "1", "3"}).out ==
        "cantor(k=1, n=3): count=8 size=1/27 measure=8/27\n");
}

TEST_CASE("compare, approx, reach, countable, distinguish") {
  CHECK(cli({"compare", "8^(g1-1)", "g1"}).out == "greater\n");
  CHECK(cli({"--json", "compare", "g1-1", "g1"}).out == "{\"ordering\":\"less\"}\n");
  CHECK(cli({"approx", "(8/9)^(g1-1)", "--at", "4"}).out == "512/729\n");
  CHECK(cli({"approx", "(8/9)^(g1-1)", "--at", "1/2"}).status == 1);
  CHECK(cli({"reach", "3"}).out == "①+2\n");
  CHECK(cli({"countable", "8^(g1-1)"}).out == "false\n");
  CHECK(cli({"countable", "0"}).status == 1);
  CHECK(cli({"distinguish", "carpet", "1", "g1", "carpet", "2", "g1"}).out == "greater 9/8\n");
  CHECK(cli({"distinguish", "sponge", "1", "g1", "carpet", "1", "g1"}).status == 1);
}

TEST_CASE("environment forces ASCII output") {
  setenv("GROSSCALC_ASCII", "1", 1);
  auto r = cli({"eval", "①-1"});
  unsetenv("GROSSCALC_ASCII");
  CHECK(r.out == "g1-1\n");
}

TEST_CASE("repl") {
  auto r = cli({"repl"},
               "compare g1+1, g1\n"
               "approx (8/9)^(g1-1) at 4\n"
               "\n"
               "carpet 2 g1-9\n"
               "1 +\n"
               "quit\n"
               "g1\n");
  CHECK(r.status == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::vector<std::string> got;
  while (std::getline(lines, line)) got.push_back(line);
  REQUIRE(got.size() >= 4);
  CHECK(got[0] == "greater");
  CHECK(got[1] == "512/729");
  CHECK(got[2].find("measure=(8/9)^(①-9)") != std::string::npos);
  CHECK(got[3].rfind("error: SyntaxError", 0) == 0);
  CHECK(r.out.find("①\n") == std::string::npos);  // nothing after quit
}

TEST_CASE("batch keeps input order and reports the worst status") {
  std::string input;
  for (int i = 1; i <= 40; ++i) input += "approx (8/9)^(g1-1) at " + std::to_string(i) + "\n";
  auto r = cli({"batch"}, input);
  CHECK(r.status == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "1");
  std::getline(lines, line);
  CHECK(line == "8/9");
  CHECK(cli({"batch"}, "g1\n(8/9)^g1 + g1\n").status == 1);
  CHECK(cli({"batch"}, "g1\n1 +\n(8/9)^g1 + g1\n").status == 2);
}

TEST_CASE("execute_command JSON errors") {
  auto o = execute_command("(8/9)^g1 + g1", {.json = true});
  CHECK(o.status == kArithmeticError);
  auto j = nlohmann::json::parse(o.text);
  CHECK(j["error"]["kind"] == "MixedScaleAddition");
  CHECK(j["error"]["span"]["begin"] == 0);
  auto s = nlohmann::json::parse(execute_command("1 +", {.json = true}).text);
  CHECK(s["error"]["kind"] == "SyntaxError");
  CHECK(s["error"]["offset"] == 3);
}

TEST_CASE("random command lines always produce a structured outcome") {
  const std::vector<std::string> pieces = {
      "compare ", "approx ", "carpet ", "sponge ", "cantor ", "reach ", "countable ",
      "distinguish ", " at ", "g1", "①", "(", ")", "+", "-", "*", "/", "^", ",", "1",
      "2", "8/9", "0", "0.5", "99", " ", "carpet(", "x"};
  std::mt19937_64 rng(77);
  for (int i = 0; i < 3000; ++i) {
    std::string line;
    const int n = static_cast<int>(rng() % 12);
    for (int j = 0; j < n; ++j) line += pieces[rng() % pieces.size()];
    CommandOutcome o = execute_command(line, {});
    CHECK((o.status == kOk || o.status == kArithmeticError || o.status == kSyntaxError));
    CHECK_FALSE(o.text.empty());
  }
}
