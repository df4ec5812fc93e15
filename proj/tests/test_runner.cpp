#include "charvanish/runner.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "doctest.h"

using namespace charvanish;

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("verification run over a small manifest") {
  const CorpusManifest manifest = parse_manifest(
      "max_order 500\n"
      "\n"
      "name s3\n"
      "family symmetric 3\n"
      "\n"
      "name c6\n"
      "family cyclic 6\n");
  const RunResult result = run_verification(manifest, VerifyOptions{}, 1);

  REQUIRE(result.reports.size() == 2);
  CHECK(result.errors.empty());
  CHECK(result.reports[0].group == "s3");
  CHECK(result.reports[0].order == 6);
  CHECK(result.reports[1].group == "c6");
  CHECK(result.all_pass());

  const std::string text = run_text(result);
  CHECK(text.find("s3 | order 6 | PASS\n") != std::string::npos);
  CHECK(text.find("c6 | order 6 | PASS\n") != std::string::npos);
  CHECK(text.find("total 2 | pass 2 | fail 0 | errors 0\n") !=
        std::string::npos);
  CHECK(text.find("verdict PASS\n") != std::string::npos);
}

TEST_CASE("groups that exceed the bounds become errors, not aborts") {
  const CorpusManifest manifest = parse_manifest(
      "max_order 100\n"
      "\n"
      "name s3\n"
      "family symmetric 3\n"
      "\n"
      "name s6\n"
      "family symmetric 6\n"
      "\n"
      "name q8\n"
      "family quaternion 8\n");
  const RunResult result = run_verification(manifest, VerifyOptions{}, 2);

  REQUIRE(result.reports.size() == 2);
  CHECK(result.reports[0].group == "s3");
  CHECK(result.reports[1].group == "q8");
  REQUIRE(result.errors.size() == 1);
  CHECK(result.errors[0].find("s6: ") == 0);
  CHECK_FALSE(result.all_pass());

  const std::string text = run_text(result);
  CHECK(text.find("error s6: ") != std::string::npos);
  CHECK(text.find("total 3 | pass 2 | fail 0 | errors 1\n") !=
        std::string::npos);
  CHECK(text.find("verdict FAIL\n") != std::string::npos);
}

TEST_CASE("an empty manifest runs to an empty passing result") {
  const CorpusManifest manifest = parse_manifest("");
  REQUIRE(manifest.groups.empty());

  const RunResult result = run_verification(manifest, VerifyOptions{}, 4);
  CHECK(result.reports.empty());
  CHECK(result.errors.empty());
  CHECK(result.all_pass());
  CHECK(run_text(result) ==
        "total 0 | pass 0 | fail 0 | errors 0\nverdict PASS\n");

  const auto j = nlohmann::json::parse(run_json(result));
  CHECK(j.at("schema") == 1);
  CHECK(j.at("all_pass") == true);
  CHECK(j.at("reports") == nlohmann::json::array());
  CHECK(j.at("errors") == nlohmann::json::array());
}

TEST_CASE("run output is byte-identical across worker counts") {
  CorpusManifest manifest;
  manifest.max_order = 1000;
  const std::vector<std::string> wanted = {"s5", "a5",  "psl2_5", "d32", "q32",
                                           "c24", "s4", "a4",     "d8",  "q16"};
  for (const GroupSpec& spec : builtin_corpus()) {
    if (std::find(wanted.begin(), wanted.end(), spec.name) != wanted.end()) {
      manifest.groups.push_back(spec);
    }
  }
  REQUIRE(manifest.groups.size() == wanted.size());

  VerifyOptions options;
  options.exhaustive = true;  // exercises the sweep for the small entries
  const RunResult serial = run_verification(manifest, options, 1);
  const RunResult packed = run_verification(manifest, options, 4);
  const RunResult excess = run_verification(manifest, options, 64);

  REQUIRE(serial.reports.size() == manifest.groups.size());
  CHECK(serial.all_pass());
  CHECK(run_json(serial) == run_json(packed));
  CHECK(run_json(serial) == run_json(excess));
  CHECK(run_text(serial) == run_text(packed));
  CHECK(run_text(serial) == run_text(excess));

  // Reports come back in manifest order.
  for (std::size_t i = 0; i < manifest.groups.size(); ++i) {
    CHECK(serial.reports[i].group == manifest.groups[i].name);
    CHECK(packed.reports[i].group == manifest.groups[i].name);
  }
}

TEST_CASE("a worker count below one is clamped to serial execution") {
  const CorpusManifest manifest = parse_manifest("name c4\nfamily cyclic 4\n");
  const RunResult result = run_verification(manifest, VerifyOptions{}, 0);
  REQUIRE(result.reports.size() == 1);
  CHECK(result.all_pass());
}

TEST_CASE("an output directory receives one report file per group") {
  const std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "charvanish_runner_out";
  std::filesystem::remove_all(dir);

  CorpusManifest manifest = parse_manifest(
      "name s3\n"
      "family symmetric 3\n"
      "\n"
      "name d8\n"
      "family dihedral 8\n");
  manifest.out_dir = dir.string();

  const RunResult result = run_verification(manifest, VerifyOptions{}, 2);
  REQUIRE(result.reports.size() == 2);
  CHECK(result.errors.empty());

  CHECK(read_file(dir / "s3.verify.json") == report_json(result.reports[0]));
  CHECK(read_file(dir / "d8.verify.json") == report_json(result.reports[1]));
  std::filesystem::remove_all(dir);
}

TEST_CASE("whole-run JSON embeds the per-group reports under schema 1") {
  const CorpusManifest manifest = parse_manifest(
      "name s4\n"
      "family symmetric 4\n");
  const RunResult result = run_verification(manifest, VerifyOptions{}, 1);
  const auto j = nlohmann::json::parse(run_json(result));

  CHECK(j.at("schema") == 1);
  CHECK(j.at("all_pass") == true);
  REQUIRE(j.at("reports").size() == 1);
  const auto& report = j.at("reports").at(0);
  CHECK(report.at("schema") == 1);
  CHECK(report.at("group") == "s4");
  CHECK(report.at("order") == 24);
  CHECK(report.at("all_pass") == true);
  CHECK(j.dump().find("elapsed") == std::string::npos);
}
