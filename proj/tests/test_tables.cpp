#include "thetalift/notation.hpp"
#include "thetalift/tables.hpp"
#include "thetalift/verify.hpp"

#include <doctest.h>
#include <openssl/evp.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <unistd.h>

using namespace tl;
namespace fs = std::filesystem;

namespace {

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  std::string out;
  char buf[3];
  for (unsigned i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    out += buf;
  }
  return out;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Edits to the transcribed tables must update these on purpose.
const std::map<std::string, std::string> kPinned{
    {kTheta1, "d5149894347b57e153fe60924cec38c0f8739fa9e3c7cc3946737baea68acd60"},
    {kTheta2, "90508d25f20f00b2541e652ebfae61d9e50d55bcde77238585272956f0cdbac4"},
    {kSp6List, "ff4cf000e7116e6f8bf63b02127d564f664cdc272eb4b69d6063f910e8758fec"},
    {kTheta3, "5528d53a8ad42480670bd4e424f872cad82ad84edd96af9b5d1d18fc2b84caf1"},
    {kTheta4, "2d415507ab5830e84cadf89066530111c2cbe8c975117affca5ea42e980d6c7d"},
};

struct TempTables {
  fs::path dir;
  TempTables() {
    dir = fs::temp_directory_path() / ("thetalift_tables_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    for (const auto& t : embedded_tables()) std::ofstream(dir / t.name, std::ios::binary) << t.text;
  }
  ~TempTables() {
    use_embedded_tables();
    std::error_code ec;
    fs::remove_all(dir, ec);
  }
  void replace(const char* table, const std::string& from, const std::string& to) {
    std::string text = slurp(dir / table);
    auto pos = text.find(from);
    REQUIRE(pos != std::string::npos);
    text.replace(pos, from.size(), to);
    std::ofstream(dir / table, std::ios::binary | std::ios::trunc) << text;
  }
};

}  // namespace

TEST_CASE("embedded tables are pinned") {
  REQUIRE(embedded_tables().size() == kPinned.size());
  for (const auto& t : embedded_tables()) {
    INFO(t.name);
    REQUIRE(kPinned.count(t.name));
    CHECK(sha256_hex(t.text) == kPinned.at(t.name));
  }
}

TEST_CASE("source tables match the embedded copies") {
  for (const auto& t : embedded_tables()) {
    fs::path p = fs::path(THETALIFT_TABLE_SOURCE_DIR) / t.name;
    INFO(p.string());
    CHECK(slurp(p) == std::string(t.text));
  }
}

TEST_CASE("all tables parse") {
  auto set = current_tables();
  CHECK(set->origin == "embedded");
  for (const char* n : {kTheta1, kTheta2, kTheta3, kTheta4, kSp6List}) CHECK_FALSE(set->get(n).rows.empty());
  CHECK(set->get(kSp6List).rows.size() == 95);
  CHECK_THROWS_AS(parse_table("broken.tbl", "pi(0,{},0,0,0,0 => {(0)}\n"), ParseError);
}

TEST_CASE("corrupted Sp(6) row is reported") {
  TempTables tmp;
  tmp.replace(kSp6List, "=> {(2,2,1)} ; b=0", "=> {(2,2,0)} ; b=0");
  use_table_dir(tmp.dir.string());
  auto rep = regenerate_appendix_c(Scalar(0));
  CHECK_FALSE(rep.ok());
  bool named = false;
  for (const auto& c : rep.cases)
    if (!c.ok && c.detail.find("(2,2,0)") != std::string::npos) named = true;
  CHECK(named);
}

TEST_CASE("corrupted lift row is reported") {
  TempTables tmp;
  tmp.replace(kTheta4, "{(2,2,2,0)}", "{(2,2,1,0)}");
  use_table_dir(tmp.dir.string());
  CHECK_FALSE(verify_theta4().ok());
  use_embedded_tables();
  CHECK(verify_theta4().ok());
}
