#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "palinwidth/cli.hpp"

using namespace palinwidth;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path.string();
}

}  // namespace

TEST_CASE("single-word commands") {
  CHECK(call({"--group", "bs:2,3", "reduce", "t^-1 a^2 t"}).out == "a^3\n");
  CHECK(call({"--group", "bs:2,3", "sqn", "t a t^-1 t^-1"}).out == "1 -1 -1\n");
  CHECK(call({"--group", "bs:2,3", "palcheck", "a t a"}).out == "true\n");
  CHECK(call({"--group", "zz", "delta", ""}).out == "0\n");
  CHECK(call({"--group", "zz", "eq", "a a^-1 b", "b"}).out == "true\n");
  CHECK(call({"--group", "zz", "eq", "a b", "b a"}).out == "false\n");
  CHECK(call({"--group", "z4z2z4", "decompose2", "x y x y"}).out == "x y x | y\n");
  CHECK(call({"--group", "zz", "symmetrize", "a b^2 a"}).out == "a b^2 a\n");
}

TEST_CASE("witness piped into delta") {
  const Result w = call({"--group", "bs:2,3", "witness", "--n", "3"});
  REQUIRE(w.code == kOk);
  CHECK(call({"--group", "bs:2,3", "delta"}, w.out).out == "3\n");
  const Result g = call({"--group", "zz", "witness", "--n", "3"});
  CHECK(call({"--group", "zz", "lowerbound"}, g.out).out == "{\"delta\": 4, \"bound\": 2}\n");
}

TEST_CASE("batch mode reads one word per line") {
  const Result r = call({"--group", "zz", "reduce"}, "a a\r\nb b^-1\n\na b a^-1\n");
  CHECK(r.code == kOk);
  CHECK(r.out == "a^2\n\n\na b a^-1\n");
}

TEST_CASE("json output") {
  const Result r = call({"--group", "zz", "--json", "lowerbound", "a b a^-1 b^-1"});
  REQUIRE(r.code == kOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("delta").is_number_integer());
  CHECK(j.at("bound").get<int>() >= 1);
  CHECK(j.contains("inequality"));
  const auto s = nlohmann::json::parse(call({"--group", "bs:2,3", "--json", "sqn", "t t^-1 t"}).out);
  CHECK(s.at("signature") == nlohmann::json::array({1}));
  const auto p = nlohmann::json::parse(call({"--group", "z4z2z4", "--json", "decompose2", "x y"}).out);
  CHECK(p.at("pieces").size() == 2);
}

TEST_CASE("exit codes") {
  CHECK(call({"--group", "bs:1,3", "reduce", "a"}).code == kUsage);
  CHECK(call({"--group", "bs:2,99999999999999999999", "reduce", "a"}).code == kUsage);
  CHECK(call({"--group", "zz", "reduce", "q"}).code == kUsage);
  CHECK(call({"--group", "zz", "symmetrize", "a b"}).code == kUsage);
  CHECK(call({"reduce", "a"}).code == kUsage);
  CHECK(call({"--group", "zz", "frobnicate"}).code == kUsage);
  CHECK(call({"--group", "z4z2z4", "delta", "x"}).code == kUnsupported);
  CHECK(call({"--group", "zz", "sqn", "a"}).code == kUsage);
  CHECK(call({"--group", "no/such/file.json", "reduce", "a"}).code == kUsage);
  const Result bad = call({"--group", "zz", "reduce", "q"});
  CHECK(bad.out.empty());
  CHECK(bad.err.find("error") != std::string::npos);
}

TEST_CASE("verify and oracle subcommands") {
  const Result q = call({"--group", "bs:2,3", "--seed", "5", "verify", "quasimorphism", "--trials", "200"});
  CHECK(q.code == kOk);
  const Result q2 = call({"--group", "bs:2,3", "--seed", "5", "verify", "quasimorphism", "--trials", "200"});
  CHECK(q.out == q2.out);
  CHECK(call({"--group", "zz", "verify", "palindrome-delta", "--length", "5", "--exp-bound", "2"}).code == kOk);
  CHECK(call({"--group", "zz", "verify", "bogus"}).code == kUsage);
  const Result o = call({"--group", "zz", "oracle", "cross-check", "--length", "3", "--exp-bound", "1"});
  CHECK(o.code == kOk);
  std::istringstream lines(o.out);
  std::string line;
  std::size_t n = 0;
  while (std::getline(lines, line)) {
    const auto j = nlohmann::json::parse(line);
    CHECK(j.contains("exact_pl"));
    ++n;
  }
  CHECK(n == 1 + 2 * 2 + 2 * 4 + 2 * 8);
}

TEST_CASE("presentation files") {
  const std::string hnn = temp_file("palinwidth_bs12.json", R"({
    "base": {"kind": "integer", "generators": ["a"]},
    "A": {"index": 1}, "B": {"index": 2},
    "phi": {"index_pair": [1, 2]}
  })");
  CHECK(call({"--group", hnn, "reduce", "t^-1 a t"}).code == kUsage);
  const std::string bs = temp_file("palinwidth_bs23.json", R"({
    "base": {"kind": "integer", "generators": ["a"]},
    "A": {"index": 2}, "B": {"index": 3},
    "phi": {"index_pair": [2, 3]}, "stable": "s"
  })");
  CHECK(call({"--group", bs, "reduce", "s^-1 a^2 s"}).out == "a^3\n");
  const std::string zz = temp_file("palinwidth_zz.json", R"({
    "factorA": {"kind": "integer", "generators": ["a"]},
    "factorB": {"kind": "integer", "generators": ["b"]},
    "C_in_A": "trivial", "C_in_B": "trivial",
    "a": {"factor": "A", "element": 1}
  })");
  CHECK(call({"--group", zz, "witness", "--n", "2"}).out == "b a b a^-1 b a b a^-1 b a^-1 b a\n");
  const std::string broken = temp_file("palinwidth_broken.json", "{ not json");
  CHECK(call({"--group", broken, "reduce", "a"}).code == kUsage);
}
