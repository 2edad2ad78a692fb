#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "lsharp/cli/app.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

// paths in reports are printed as given, so run from the source tree
Run invoke(std::vector<std::string> args) {
  static const bool moved = [] {
    fs::current_path(LSHARP_SOURCE_DIR);
    return true;
  }();
  (void)moved;
  std::ostringstream out, err;
  const int code = lsharp::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool regen() {
  const char* v = std::getenv("LSHARP_REGEN_GOLDEN");
  return v != nullptr && std::string(v) == "1";
}

void check_golden(const std::string& name, const Run& r) {
  const fs::path p = fs::path(LSHARP_SOURCE_DIR) / "tests" / "golden" / (name + ".json");
  if (regen()) {
    std::ofstream(p, std::ios::binary) << r.out;
    MESSAGE("rewrote " << p.string());
    return;
  }
  std::ifstream in(p, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing golden " << p.string() << " (set LSHARP_REGEN_GOLDEN=1)");
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK_MESSAGE(ss.str() == r.out, "golden mismatch for " << name);
}

}  // namespace

TEST_CASE("goldens") {
  struct Case {
    std::string name;
    std::vector<std::string> args;
    int code;
  };
  const std::vector<Case> cases = {
      {"invariants_delta", {"invariants", "data/delta.json"}, 0},
      {"invariants_zeta2", {"invariants", "data/zeta2.json"}, 0},
      {"classify_delta", {"classify", "data/delta.json"}, 0},
      {"classify_maass", {"classify", "data/maass_k5.json"}, 0},
      {"classify_zeta2_pair", {"classify", "data/zeta2.json", "--pair", "--omega", "1"}, 0},
      {"classify_weight14", {"classify", "tests/golden/inputs/weight14.json"}, 0},
      {"dstruct_delta", {"dstruct", "data/delta.json", "--order", "4", "--method", "both"}, 0},
      {"dstruct_maass_p128", {"--precision-bits", "128", "dstruct", "data/maass_k5.json", "--order", "3"}, 0},
      {"verify_recursion", {"verify-recursion"}, 0},
      {"fecheck_delta", {"fecheck", "--series", "delta"}, 0},
      {"fecheck_zeta2", {"fecheck", "--series", "zeta2", "--points", "0.5+10i,2+1i"}, 0},
      {"twist_delta_offspec", {"twist", "--series", "delta", "--alpha", "sqrt(2)", "--xgrid", "30:300:6"}, 0},
      {"twist_delta", {"twist", "--series", "delta", "--alpha", "2", "--xgrid", "30:3000:7"}, 0},
      {"error_parse", {"invariants", "tests/golden/inputs/broken.json"}, 2},
      {"error_missing", {"invariants", "tests/golden/inputs/nope.json"}, 2},
  };
  for (const auto& c : cases) {
    CAPTURE(c.name);
    const Run r = invoke(c.args);
    CHECK(r.code == c.code);
    check_golden(c.name, r);
  }
}

TEST_CASE("repeat runs are byte-identical") {
  const std::vector<std::string> args = {"fecheck", "--series", "delta"};
  const Run a = invoke(args);
  const Run b = invoke(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const Run t1 = invoke({"twist", "--series", "delta", "--xgrid", "30:3000:7", "--threads", "1"});
  const Run t3 = invoke({"twist", "--series", "delta", "--xgrid", "30:3000:7", "--threads", "3"});
  // threads is echoed in inputs, the rest must match
  auto strip = [](std::string s) {
    const auto at = s.find("\"threads\"");
    if (at != std::string::npos) s.erase(at, s.find('\n', at) - at);
    return s;
  };
  CHECK(strip(t1.out) == strip(t3.out));
}

TEST_CASE("exit codes and usage errors") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"twist", "--series", "nope"}).code == 2);
  CHECK(invoke({"invariants", "data/delta.json", "--json", "--human"}).code == 2);
  CHECK(invoke({"--help"}).code == 0);

  const Run h = invoke({"invariants", "data/delta.json", "--human"});
  CHECK(h.code == 0);
  CHECK(h.out.find("wall time:") != std::string::npos);
  const Run j = invoke({"invariants", "data/delta.json"});
  CHECK(j.out.find("wall time") == std::string::npos);
  CHECK(j.err.find("wall time:") != std::string::npos);

  // too short a grid for the fit: the report is produced, the check fails
  const Run shortgrid = invoke({"twist", "--series", "delta", "--alpha", "2", "--xgrid", "5:12:6"});
  CHECK(shortgrid.code == 1);
  CHECK(shortgrid.out.find("\"pass\": false") != std::string::npos);

  const Run bad = invoke({"fecheck", "--series", "delta", "--points", "1+0.0001i"});
  CHECK(bad.code == 2);
  CHECK(bad.out.find("SlowConvergence") != std::string::npos);
}
