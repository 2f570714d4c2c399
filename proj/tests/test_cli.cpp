#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

Run run(const std::vector<std::string>& args) {
  std::string cmd = THETALIFT_BIN;
  for (const auto& a : args) cmd += " " + quote(a);
  cmd += " 2>&1";
  Run r;
  FILE* f = popen(cmd.c_str(), "r");
  REQUIRE(f);
  std::array<char, 4096> buf;
  std::size_t k;
  while ((k = fread(buf.data(), 1, buf.size(), f)) > 0) r.out.append(buf.data(), k);
  int st = pclose(f);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

nlohmann::json js(const Run& r) {
  INFO(r.out);
  REQUIRE(r.code == 0);
  return nlohmann::json::parse(r.out);
}

const std::string kDet22 = "pi_{-1}(0,1,{},0,0,(1,1),(0,1)) @ O(2,2)";

}  // namespace

TEST_CASE("lift") {
  auto j = js(run({"--json", "lift", "--params", kDet22, "--n", "4"}));
  CHECK(j["zero"] == false);
  CHECK(j["lift"] == "pi(0,{},(1,1),(1,3),0,0)");
  CHECK(j["lowest_ktypes"] == nlohmann::json::array({"(1,1,-1,-1)"}));
  // flag placement after the subcommand works too
  auto k = js(run({"lift", "--params", kDet22, "--n", "4", "--json"}));
  CHECK(k["lift"] == j["lift"]);

  auto z = run({"lift", "--params", kDet22, "--n", "3"});
  CHECK(z.code == 0);
  CHECK(run({"lift", "--params", kDet22, "--n", "3", "--expect-nonzero"}).code == 1);
  CHECK(run({"lift", "--params", kDet22, "--n", "4", "--expect-nonzero"}).code == 0);
}

TEST_CASE("infchar, lkt, first occurrence") {
  auto a = run({"infchar", "--params", "pi(0,{},(1,1),(1,3),0,0)"});
  CHECK(a.code == 0);
  CHECK(a.out.find("(0,1,1,2)") != std::string::npos);
  auto b = js(run({"--json", "lkt", "--params", "pi(0,{},(1),(1),(1),(5))"}));
  CHECK(b["lowest_ktypes"] == nlohmann::json::array({"(1,0,-1)"}));
  auto c = js(run({"--json", "lkt", "--params", kDet22}));
  CHECK(c["lowest_ktypes"] == nlohmann::json::array({"(0;-1)x(0;-1)"}));
  auto d = js(run({"--json", "first-occurrence", "--params", kDet22}));
  CHECK(d["first_occurrence"] == 4);
}

TEST_CASE("phi") {
  auto a = js(run({"--json", "phi", "--dir", "o2u", "--ktype", "(0;-1)x(0;-1)", "--sig", "2,2", "--n", "4"}));
  CHECK(a["image"] == "(1,1,-1,-1)");
  auto b = js(run({"--json", "phi", "--dir", "o2u", "--ktype", "(0;-1)x(0;-1)", "--sig", "2,2", "--n", "3"}));
  CHECK(b["image"].is_null());
  auto c = js(run({"--json", "phi", "--dir", "u2o", "--ktype", "(2,2,2,0)", "--sig", "3,1", "--n", "4"}));
  CHECK(c["image"] == "(0;-1)x(;-1)");
}

TEST_CASE("enumerate") {
  auto a = js(run({"--json", "enumerate", "--n", "3", "--infchar", "2,0,1"}));
  CHECK(a["count"] == 62);
  auto b = js(run({"--json", "enumerate", "--n", "3", "--infchar", "b,0,1", "--beta", "generic"}));
  CHECK(b["count"] == 26);
  CHECK(run({"enumerate", "--n", "5", "--infchar", "1,2,3,4,5"}).code == 2);
}

TEST_CASE("verify and inverse lookup") {
  auto v = run({"verify", "--suite", "theta4"});
  CHECK(v.code == 0);
  CHECK(run({"verify", "--suite", "nonsense"}).code == 2);
  auto i = js(run({"--json", "inverse-lookup", "--sp-params", "pi(0,{},(1,1),(1,3),0,0)", "--sig", "2,2"}));
  CHECK(i["preimages"] == nlohmann::json::array({kDet22}));
  CHECK(run({"inverse-lookup", "--sp-params", "pi(0,{},0,0,(1,1,1,1),(9,7,5,3))", "--sig", "2,2"}).code == 1);
}

TEST_CASE("bad input never crashes") {
  CHECK(run({}).code == 2);
  CHECK(run({"--bogus"}).code == 2);
  CHECK(run({"lift", "--params", "garbage", "--n", "3"}).code == 2);
  CHECK(run({"lift", "--params", kDet22}).code == 2);
  CHECK(run({"lift", "--params", "pi(0,{},0,0,0,0)", "--n", "1"}).code == 2);
  CHECK(run({"lift", "--params", "pi_{1}(0,1,{},0,0,0,0) @ O(3,3)", "--n", "1"}).code == 2);
  CHECK(run({"phi", "--dir", "sideways", "--ktype", "(0)", "--sig", "2,2", "--n", "1"}).code == 2);
  CHECK(run({"lkt", "--params", "pi((0,1),{e1+-e2,2e1,2e2},0,0,0,0)"}).code == 2);
  CHECK(run({"--table-dir", "/nonexistent/dir", "lift", "--params", kDet22, "--n", "4"}).code != 0);
}
