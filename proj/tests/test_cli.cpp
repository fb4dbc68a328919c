#include "fixtures.hpp"

#include "ultra/cli.hpp"
#include "ultra/space_io.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

namespace fs = std::filesystem;
using ultra::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("ultra_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    const auto p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

 private:
  fs::path path_;
};

}  // namespace

TEST_CASE("check verdicts and exit codes") {
  TempDir dir;
  const auto c4 = dir.write("cantor2.space", ultra::serialize_space(fixtures::c4()));
  const auto t3 = dir.write("t3.space", ultra::serialize_space(fixtures::t3()));

  auto r = call({"check", "--homogeneous", c4});
  CHECK(r.code == 0);
  CHECK(r.out == "homogeneous: true\n");
  r = call({"check", "--homogeneous", t3});
  CHECK(r.code == 1);
  CHECK(r.out == "homogeneous: false\n");

  r = call({"check", t3});
  CHECK(r.code == 1);
  CHECK(r.out ==
        "homogeneous: false\nspec-homogeneous: true\ntransitive: false\ncondition A: true\ncondition B: true\n"
        "h1: false\nh2: true\n");
  r = call({"check", "--brute-force", c4});
  CHECK(r.code == 0);
  r = call({"check", "--condition-a", "--property-h", c4});
  CHECK(r.out == "condition A: true\nh1: true\nh2: true\n");
}

TEST_CASE("validate, info and nerve") {
  TempDir dir;
  const auto bad = dir.write(
      "bad.space", R"({"points":["a","b","c"],"distances":[["a","b","1/2"],["a","c","1"],["b","c","1/3"]]})");
  auto r = call({"validate", bad});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK(r.err.find("TriangleViolation") != std::string::npos);
  CHECK(r.err.find("(a, c, b)") != std::string::npos);

  const auto t3 = dir.write("t3.space", ultra::serialize_space(fixtures::t3()));
  r = call({"validate", t3});
  CHECK(r.code == 0);
  CHECK(r.out == "valid: 3 points\n");

  r = call({"info", t3});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "points: 3\nspectrum: {0, 1/2, 1}\nmultispectrum: {{0, 1/2, 1}, {0, 1}}\n"
        "degree sequence: {1/2: 2, 1: 2}\nnerve nodes: 5\n");

  r = call({"nerve", t3});
  CHECK(r.out == "1 {a, b, c}\n  1/2 {a, b}\n    0 {a}\n    0 {b}\n  0 {c}\n");
  r = call({"nerve", "--json", t3});
  CHECK(r.code == 0);
  CHECK(r.out.find(R"("nodes":[{"members":["a","b","c"],"diameter":"1","parent":null,"children":[1,4]})") !=
        std::string::npos);

  r = call({"validate", (fs::temp_directory_path() / "no_such_file.space").string()});
  CHECK(r.code == 2);
  CHECK(r.err.rfind("error: ", 0) == 0);
}

TEST_CASE("extend, embed, isometric and decompose") {
  TempDir dir;
  const auto c4 = dir.write("c4.space", ultra::serialize_space(fixtures::c4()));
  const auto t3 = dir.write("t3.space", ultra::serialize_space(fixtures::t3()));
  const auto xyz = dir.write("xyz.space", ultra::serialize_space(fixtures::t3_renamed()));

  auto r = call({"extend", c4, "--map", "00:10,01:11"});
  CHECK(r.code == 0);
  CHECK(r.out == "extends: true\n00 → 10\n01 → 11\n10 → 00\n11 → 01\n");
  r = call({"extend", t3, "--map", "a:c"});
  CHECK(r.code == 1);
  CHECK(r.out == "extends: false\n");
  r = call({"extend", t3, "--map", "a:c,b:a"});
  CHECK(r.code == 2);
  CHECK(r.err.find("NotAnIsometry") != std::string::npos);
  r = call({"extend", t3, "--map", "a:q"});
  CHECK(r.code == 2);
  r = call({"extend", t3, "--map", "ab"});
  CHECK(r.code == 2);

  r = call({"embed", t3});
  CHECK(r.out == "a → {}\nb → {1/2: 1}\nc → {1: 1}\ndegree function: {1/2: 2, 1: 2}\n");

  r = call({"isometric", t3, xyz});
  CHECK(r.code == 0);
  CHECK(r.out == "isometric: true\na → x\nb → y\nc → z\n");
  r = call({"isometric", t3, c4});
  CHECK(r.code == 1);

  r = call({"decompose", "--verify-nerve", t3});
  CHECK(r.code == 0);
  CHECK(r.out == "1 {a, b, c}\n  1/2 {a, b}\n    0 {a}\n    0 {b}\n  0 {c}\nequals nerve: true\n");
}

TEST_CASE("generators") {
  auto r = call({"gen", "cantor", "--depth", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == ultra::serialize_space(fixtures::c4()));
  r = call({"gen", "product", "--spectrum", "1:2"});
  CHECK(r.out == R"j({"points":["(0)","(1)"],"distances":[["(0)","(1)","1"]]})j" "\n");
  r = call({"gen", "random", "--points", "3", "--seed", "42", "--pool", "1/2,1"});
  CHECK(r.out == R"({"points":["p0","p1","p2"],"distances":[["p0","p1","1/2"],["p0","p2","1"],["p1","p2","1"]]})" "\n");
  // byte-identical reruns
  const auto a = call({"gen", "random", "--points", "30", "--seed", "7", "--pool", "1/3,1/2,1"});
  const auto b = call({"gen", "random", "--points", "30", "--seed", "7", "--pool", "1/3,1/2,1"});
  CHECK(a.out == b.out);
  CHECK(call({"gen", "cantor", "--depth", "13"}).code == 2);
  CHECK(call({"gen", "product", "--spectrum", "1:1"}).code == 2);
  CHECK(call({"gen", "random", "--points", "3", "--seed", "1", "--pool", "0"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"check"}).code == 2);
  CHECK(call({"extend", "x.space"}).code == 2);
  CHECK(call({"gen", "cantor"}).code == 2);
  const auto help = call({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("validate") != std::string::npos);
}
