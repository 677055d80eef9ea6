#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "coframe/reproduce.hpp"

using namespace coframe;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

#ifdef COFRAME_TOOL_PATH
int run_tool(const std::string& args) {
  std::string cmd = std::string(COFRAME_TOOL_PATH) + " " + args +
                    " > /dev/null 2> /dev/null";
  int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WEXITSTATUS(status);
}
#endif

}  // namespace

TEST_CASE("embedded fixtures match the shipped files byte for byte") {
  std::filesystem::path dir(FIXTURE_DIR);
  const auto& embedded = fixture_files();
  std::size_t onDisk = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    ++onDisk;
    std::string name = entry.path().filename().string();
    REQUIRE_MESSAGE(embedded.count(name) == 1, name);
    CHECK_MESSAGE(embedded.at(name) == slurp(entry.path()), name);
  }
  CHECK(onDisk == embedded.size());
}

TEST_CASE("input resolution prefers files, falls back to fixtures") {
  CHECK(resolve_input("h.alg") == fixture_text("h.alg"));
  std::filesystem::path disk =
      std::filesystem::path(FIXTURE_DIR) / "pkz.alg";
  CHECK(resolve_input(disk.string()) == fixture_text("pkz.alg"));
  CHECK_THROWS_AS(resolve_input("no_such_input.alg"), Error);
  CHECK_THROWS_AS(fixture_text("missing"), Error);
}

TEST_CASE("reports render deterministically in both formats") {
  RunReport a = run_resonances("h.alg", fixture_text("h.alg"), 2, "zeta",
                               20240817);
  RunReport b = run_resonances("h.alg", fixture_text("h.alg"), 2, "zeta",
                               20240817);
  CHECK(render_text(a) == render_text(b));
  CHECK(render_structured(a) == render_structured(b));
  // both renderings expose the same generic dimension
  std::string txt = render_text(a);
  CHECK(txt.find("generic dimension: " +
                 std::to_string(a.data["generic_dimension"].get<int>())) !=
        std::string::npos);
  nlohmann::json j = nlohmann::json::parse(render_structured(a));
  CHECK(j["schema_version"] == kReportSchemaVersion);
  CHECK(j["data"]["generic_dimension"] == a.data["generic_dimension"]);
  CHECK(j["pass"] == a.pass);
}

TEST_CASE("command smoke tests over embedded fixtures") {
  RunReport chk = run_check("h.alg", fixture_text("h.alg"));
  CHECK(chk.pass);
  CHECK(chk.exitCode == 0);
  RunReport raw = run_check("pkz_raw.alg", fixture_text("pkz_raw.alg"));
  CHECK(!raw.pass);
  CHECK(raw.exitCode == 1);

  RunReport coh = run_cohomology("h.alg", fixture_text("h.alg"), 2,
                                 std::optional<Rat>(rat(-1)), "zeta", 1);
  CHECK(coh.data["dimension"] == 3);
  RunReport gen = run_cohomology("h.alg", fixture_text("h.alg"), 2,
                                 std::nullopt, "zeta", 1);
  CHECK(gen.data["dimension"] == 0);
  CHECK(gen.data["lambda"] == "generic");

  RunReport cov =
      run_verify_covering("pkz_covering.pde", fixture_text("pkz_covering.pde"));
  CHECK(cov.pass);
  RunReport bad = run_verify_covering("pkz_covering_broken.pde",
                                      fixture_text("pkz_covering_broken.pde"));
  CHECK(!bad.pass);
  CHECK(bad.exitCode == 1);

  RunReport vc = run_verify_coords("bf.mcf", fixture_text("bf.mcf"), "bf.alg",
                                   fixture_text("bf.alg"), "all", "");
  CHECK(vc.pass);
  CHECK(vc.data["results"].size() > 0);

  CHECK_THROWS_AS(run_cohomology("h.alg", fixture_text("h.alg"), 2,
                                 std::nullopt, "nope", 1),
                  UndeclaredSymbol);
}

TEST_CASE("verify-coords flags fixture/algebra mismatches") {
  CHECK_THROWS_AS(run_verify_coords("bf.mcf", fixture_text("bf.mcf"),
                                    "pkz.alg", fixture_text("pkz.alg"), "all",
                                    ""),
                  Error);
}

#ifdef COFRAME_TOOL_PATH
TEST_CASE("tool exit codes: 0 pass, 1 verification failure, 2 input error") {
  CHECK(run_tool("check h.alg") == 0);
  CHECK(run_tool("check pkz_raw.alg") == 1);
  CHECK(run_tool("check no_such_file.alg") == 2);
  CHECK(run_tool("cohomology h.alg --degree 2 --lambda -1") == 0);
  CHECK(run_tool("cohomology h.alg") == 2);  // --degree is required
  CHECK(run_tool("verify-covering pkz_covering_broken.pde") == 1);
  CHECK(run_tool("verify-coords pkz --all") == 0);
  CHECK(run_tool("resonances bf.alg --degree 2 --format structured") == 0);
  CHECK(run_tool("--help") == 0);

  std::filesystem::path tmp =
      std::filesystem::temp_directory_path() / "coframe_malformed.alg";
  std::ofstream(tmp) << "algebra broken\nform a\nd a = a ^\n";
  CHECK(run_tool("check " + tmp.string()) == 2);
  std::filesystem::remove(tmp);
}
#endif
