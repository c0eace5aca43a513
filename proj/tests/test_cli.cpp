#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(CHOOSEKIT_CLI) + " " + args + " 2>&1";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_file(const std::string& name, const std::string& text) {
  std::string path = "/tmp/choosekit_cli_" + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("cli exit codes") {
  CHECK(run("classify --named 'theta(3,3,3)'").code == 1);
  CHECK(run("classify --named 'theta(2,2,4)'").code == 0);
  CHECK(run("classify --named 'theta(2,2,4)' --a 2 --b 1").code == 0);
  CHECK(run("classify --named 'theta(2,2,3)' --a 2 --b 1").code == 1);
  CHECK(run("catalogue-check").code == 0);
  CHECK(run("classify --bogus").code == 2);
  CHECK(run("classify --named 'nonsense(3)'").code == 2);
  CHECK(run("construct --m 1").code == 0);
  CHECK(run("construct --m 9").code == 2);
}

TEST_CASE("cli files and json") {
  std::string g = temp_file("c4.txt", "a b\nb c\nc d\nd a\n");
  std::string l = temp_file("c4.lists", "a: 1 2 3 4\nb: 1 2 3 4\nc: 1 2 3 4\nd: 1 2 3 4\n");
  auto s = run("solve --graph " + g + " --lists " + l);
  CHECK(s.code == 0);
  auto bad = temp_file("bad.txt", "a b\nb\n");
  auto e = run("classify --graph " + bad);
  CHECK(e.code == 2);
  CHECK(e.out.find("line 2") != std::string::npos);
  auto j = run("classify --named 'cycle(7)' --json");
  CHECK(j.code == 1);
  CHECK(j.out.find("\"odd_cycle\"") != std::string::npos);
  CHECK(j.out.find("\"witness\"") != std::string::npos);
}

TEST_CASE("cli census") {
  auto ok = run("census --named 'cycle(4)' --pot-bound 6 --expect 6:2,5:2,4:1");
  CHECK(ok.code == 0);
  auto mismatch = run("census --named 'cycle(4)' --pot-bound 6 --expect 6:1,5:2,4:1");
  CHECK(mismatch.code == 1);
  auto w = run("witness --named 'theta(3,3,3)' --auto");
  CHECK(w.code == 1);
}
