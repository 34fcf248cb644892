#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(REALDCP_BIN) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("poincare output matches the printed polynomials") {
  CHECK(run("poincare --type F4").out == "1 - 50 t + 49 t^2\n");
  CHECK(run("poincare --type A1").out == "1\n");
  CHECK(run("poincare --type H3").out == "1 - 16 t\n");
  CHECK(run("poincare --type B5").out == "1 - 50 t + 289 t^2\n");
  CHECK(run("poincare --type I2(9)").out == "1 - t\n");
  CHECK(run("poincare --type F4 --format latex").out == "$1 - 50t + 49t^{2}$\n");
}

TEST_CASE("euler runs both routes and reports agreement") {
  auto r = run("euler --type B7");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("-25200") != std::string::npos);
  CHECK(r.out.find("agree") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run("poincare --type Q7").exit_code == 2);
  CHECK(run("poincare --type I2(2)").exit_code == 2);
  CHECK(run("poincare").exit_code == 2);           // missing required option
  CHECK(run("poincare --type B4 --cap 5").exit_code == 3);
  CHECK(run("h1 --type A4").exit_code == 2);
}

TEST_CASE("determinism across repeats and worker counts") {
  auto a = run("poincare --type B4 --format json");
  auto b = run("poincare --type B4 --format json");
  auto c = run("poincare --type B4 --format json --workers 3");
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  auto v1 = run("verify --type B3");
  auto v2 = run("verify --type B3 --workers 2");
  CHECK(v1.out == v2.out);
  CHECK(v1.exit_code == 0);
}

TEST_CASE("verify prints one line per named check") {
  auto r = run("verify --type D4");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("PASS D4 d-relation") != std::string::npos);
  CHECK(r.out.find("PASS D4 mobius-oracle") != std::string::npos);
  CHECK(r.out.find("PASS D4 semimodularity") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("cache export and reload give identical reports") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "realdcp_cli_cache";
  fs::remove_all(dir);
  fs::create_directories(dir);
  auto exp = run("poset-export --type B4 --cache-dir " + dir.string());
  CHECK(exp.exit_code == 0);
  REQUIRE(fs::exists(dir / "B4.poset.json"));

  auto direct = run("betti --type B4 --format json");
  auto cached = run("betti --type B4 --format json --cache-dir " + dir.string());
  CHECK(direct.out == cached.out);

  // exporting again writes identical bytes
  std::ifstream f1(dir / "B4.poset.json");
  std::string bytes1((std::istreambuf_iterator<char>(f1)), std::istreambuf_iterator<char>());
  run("poset-export --type B4 --cache-dir " + dir.string());
  std::ifstream f2(dir / "B4.poset.json");
  std::string bytes2((std::istreambuf_iterator<char>(f2)), std::istreambuf_iterator<char>());
  CHECK(bytes1 == bytes2);

  // a corrupt cache is a parse error
  std::ofstream(dir / "B3.poset.json") << "garbage";
  CHECK(run("poincare --type B3 --cache-dir " + dir.string()).exit_code == 2);
  fs::remove_all(dir);
}

TEST_CASE("multiplicities and character reports") {
  auto m = run("multiplicities --type B4 --format csv");
  CHECK(m.exit_code == 0);
  CHECK(m.out.find("group,character,degree,inner_product,closed_form") == 0);
  auto d = run("multiplicities --type D4");
  CHECK(d.exit_code == 0);
  auto c = run("character --type B3 --format json");
  CHECK(c.exit_code == 0);
  CHECK(c.out.find("\"betti\"") != std::string::npos);
  CHECK(c.out.find("\"checks\"") != std::string::npos);
}
