#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "catch_amalgamated.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

Run cli(const std::string& args) {
  const std::string cmd = std::string("\"") + G2KIT_CLI_PATH + "\" " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, p)) out.append(buf, n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

fs::path scratch(const std::string& tag) {
  fs::path d = fs::temp_directory_path() / ("g2kit_cli_" + tag + "_" + std::to_string(::getpid()));
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("casimir subcommand", "[cli]") {
  CHECK(cli("casimir --lambda 0 --mu 1").out == "dim=7 c2=4\n");
  CHECK(cli("casimir --lambda 0 --mu 2").out == "dim=27 c2=28/3\n");
  CHECK(cli("casimir --lambda 2 --mu 0").out == "dim=77 c2=20\n");
  CHECK(cli("casimir --lambda 0 --mu 3").code == 0);
}

TEST_CASE("slice and charpoly subcommands", "[cli]") {
  CHECK(cli("slice --a 1 --b 0 --quantity C6").out == "284/441\n");
  CHECK(cli("slice --a 1 --b 0 --quantity trB6").out == "127/9\n");
  CHECK(cli("slice --symbolic --quantity C2").out == "a^2 + b^2\n");
  const Run cp = cli("charpoly --a 1 --b 0");
  CHECK(cp.code == 0);
  CHECK(cp.out.find("t^1 (-1/54,0,0,0,0,0,0,0|0,0,0,0,0,0,0,0)") != std::string::npos);
  CHECK(cp.out.find("t^7 (1,0,0,0,0,0,0,0|0,0,0,0,0,0,0,0)") != std::string::npos);
}

TEST_CASE("usage errors exit with 2", "[cli]") {
  CHECK(cli("").code == 2);
  CHECK(cli("verify --suite nope").code == 2);
  CHECK(cli("slice --a 1 --b 0 --quantity Q7").code == 2);
  CHECK(cli("slice --quantity C2").code == 2);
  CHECK(cli("slice --a 1/0 --b 0 --quantity C2").code == 2);
  CHECK(cli("casimir --lambda x --mu 0").code == 2);
}

TEST_CASE("build, reload and verify", "[cli]") {
  const fs::path dir = scratch("build");
  REQUIRE(cli("build --out \"" + dir.string() + "\"").code == 0);
  for (const char* f : {"b3_defining.txt", "g2_defining.txt", "z.txt", "y.txt", "M.txt", "manifest.txt"})
    CHECK(fs::exists(dir / f));
  CHECK(fs::exists(dir / "tensors" / "psi_abc.txt"));
  CHECK(slurp(dir / "manifest.txt").find("h_sign=-1\n") != std::string::npos);

  const fs::path report = dir / "octonion.txt";
  const Run v = cli("verify --suite octonion --tensors \"" + (dir / "tensors").string() + "\" --report \"" +
                    report.string() + "\"");
  CHECK(v.code == 0);
  CHECK(v.out == "SUMMARY suite=octonion cases=8 passed=8 failed=0\n");
  CHECK(slurp(report).find("CASE A1.1 PASS") != std::string::npos);

  // a corrupted tensor file makes the suite fail with exit code 1
  const fs::path psi = dir / "tensors" / "psi_abc.txt";
  std::string text = slurp(psi);
  const std::string first = "1 2 3 (1,0,0,0,0,0,0,0|0,0,0,0,0,0,0,0)";
  REQUIRE(text.find(first) != std::string::npos);
  text.replace(text.find(first), first.size(), "1 2 3 (2,0,0,0,0,0,0,0|0,0,0,0,0,0,0,0)");
  std::ofstream(psi, std::ios::binary) << text;
  const Run bad = cli("verify --suite octonion --tensors \"" + (dir / "tensors").string() + "\"");
  CHECK(bad.code == 1);
  CHECK(bad.out.find("FAIL") != std::string::npos);

  // a malformed tensor file is an input error
  std::ofstream(psi, std::ios::binary) << "# g2kit tensor v1\nname=psi_abc rank=3\n";
  CHECK(cli("verify --suite octonion --tensors \"" + (dir / "tensors").string() + "\"").code == 2);
  fs::remove_all(dir);
}
