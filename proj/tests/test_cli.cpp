#include "doctest.h"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include "test_data.hpp"

namespace fs = std::filesystem;

namespace {

const std::string kCli = PPATTACH_CLI_PATH;

int run(const std::string& args) {
  const std::string cmd = "'" + kCli + "' " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("ppattach_cli_" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

std::string q(const std::string& s) { return "'" + s + "'"; }

// chunk -> extract -> train on the mini corpus into dir.
void mini_pipeline(const TempDir& t) {
  const std::string lex = " --lexicon " + q(data_path("english.lex"));
  REQUIRE(run("chunk -i " + q(data_path("mini.tagged")) + " -o " + q(t / "c") + lex) == 0);
  REQUIRE(run("extract -i " + q(t / "c") + " -o " + q(t / "t") + " --report " + q(t / "r") + lex) == 0);
  REQUIRE(run("train --corpus " + q(t / "c") + " --tuples " + q(t / "t") + " --model " + q(t / "m") + lex) ==
          0);
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("mini corpus pipeline reproduces the golden artifacts") {
  TempDir t;
  mini_pipeline(t);
  CHECK(slurp(t / "c") == slurp(data_path("golden/mini.chunked")));
  CHECK(slurp(t / "t") == slurp(data_path("golden/mini.tuples")));
  CHECK(slurp(t / "r") == slurp(data_path("golden/mini.extract_report")));
  CHECK(slurp(t / "m") == slurp(data_path("golden/mini.model")));
  const std::string lex = " --lexicon " + q(data_path("english.lex"));
  for (const std::string v : {"baseline", "bigram", "interp"}) {
    CAPTURE(v);
    REQUIRE(run("eval --model " + q(t / "m") + " --test " + q(data_path("mini_test.txt")) + lex +
                " --variant " + v + " --report " + q(t / ("e_" + v))) == 0);
    CHECK(slurp(t / ("e_" + v)) == slurp(data_path("golden/mini_eval_" + v + ".tsv")));
  }
  REQUIRE(run("classify --model " + q(t / "m") + " -i " + q(data_path("mini_test.txt")) + lex +
              " --variant interp -o " + q(t / "p")) == 0);
  CHECK(slurp(t / "p") == slurp(data_path("golden/mini_interp.predictions")));
}

TEST_CASE("reruns are byte identical") {
  TempDir a, b;
  mini_pipeline(a);
  mini_pipeline(b);
  for (const char* f : {"c", "t", "r", "m"}) CHECK(slurp(a / f) == slurp(b / f));
}

TEST_CASE("of items are all labelled N") {
  TempDir t;
  mini_pipeline(t);
  write_file(t / "of.txt", "eat cake of chocolate\nwash shirt of cotton\nrise num of num\nsell box of x\n");
  REQUIRE(run("classify --model " + q(t / "m") + " -i " + q(t / "of.txt") + " -o " + q(t / "p")) == 0);
  std::ifstream in(t / "p");
  int lines = 0;
  for (std::string line; std::getline(in, line); ++lines) {
    CHECK(line.find("\tN\tof_rule\t") != std::string::npos);
  }
  CHECK(lines == 4);
}

TEST_CASE("baseline evaluation needs no model") {
  TempDir t;
  REQUIRE(run("eval --variant baseline --test " + q(data_path("mini_test.txt")) + " --report " +
              q(t / "e")) == 0);
  CHECK(slurp(t / "e") == slurp(data_path("golden/mini_eval_baseline.tsv")));
}

TEST_CASE("dash means standard streams") {
  TempDir t;
  const std::string cmd = "cat " + q(data_path("mini.tagged")) + " | '" + kCli + "' chunk -i - -o - --lexicon " +
                          q(data_path("english.lex")) + " > " + q(t / "c");
  REQUIRE(std::system(cmd.c_str()) == 0);
  CHECK(slurp(t / "c") == slurp(data_path("golden/mini.chunked")));
}

TEST_CASE("error classes map to distinct exit codes") {
  TempDir t;
  mini_pipeline(t);
  const std::string test = " --test " + q(data_path("mini_test.txt"));

  CHECK(run("no-such-command") == 2);
  CHECK(run("eval --variant nonsense" + test) == 2);
  CHECK(run("train --corpus " + q(t / "c")) == 2);

  write_file(t / "bad.tagged", "fine/NN broken ./.\n");
  CHECK(run("chunk -i " + q(t / "bad.tagged") + " -o " + q(t / "x")) == 3);

  std::string model = slurp(t / "m");
  model.replace(model.find("# format=1"), 10, "# format=9");
  write_file(t / "future.model", model);
  CHECK(run("eval --model " + q(t / "future.model") + test) == 4);

  CHECK(run("eval --config spanish --model " + q(t / "m") + test) == 5);

  write_file(t / "empty.tuples", "");
  REQUIRE(run("train --corpus " + q(t / "c") + " --tuples " + q(t / "empty.tuples") + " --model " +
              q(t / "untrained")) == 0);
  CHECK(run("eval --variant bigram --model " + q(t / "untrained") + test) == 6);

  CHECK(run("eval --model " + q(t / "missing.model") + test) == 1);
}

TEST_CASE("version reports format versions") {
  TempDir t;
  const std::string cmd = "'" + kCli + "' --version > " + q(t / "v");
  REQUIRE(std::system(cmd.c_str()) == 0);
  const std::string v = slurp(t / "v");
  CHECK(v.find("model format 1") != std::string::npos);
}

TEST_CASE("config directory from the environment") {
  TempDir t;
  write_file(t / "mine.conf", "language_id = en\n");
  const std::string cmd = "PPATTACH_CONFIG_DIR=" + q(t.path.string()) + " '" + kCli +
                          "' chunk --config mine -i " + q(data_path("mini.tagged")) + " -o " + q(t / "c") +
                          " --lexicon " + q(data_path("english.lex"));
  CHECK(std::system(cmd.c_str()) == 0);
  CHECK(slurp(t / "c") == slurp(data_path("golden/mini.chunked")));
}

TEST_SUITE_END();
