#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Runs the tool with stderr silenced; stdout is the data channel.
RunResult run_cli(const std::string& args) {
  const std::string command =
      std::string(SCHROEDER_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer;
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.out.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_CASE("enumerate: counts and formats") {
  const RunResult ls0 = run_cli("enumerate --family ls --n 0");
  CHECK(ls0.exit_code == 0);
  CHECK(ls0.out.find("LS_0: 1 elements") != std::string::npos);

  const RunResult csv = run_cli("enumerate --family ss --n 2 --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.out == "1->1\n1,2->1\n1->1;2->2\n");

  const RunResult json_run =
      run_cli("enumerate --family ls --n 3 --format json");
  CHECK(json_run.exit_code == 0);
  const auto parsed = nlohmann::json::parse(json_run.out);
  CHECK(parsed["count"] == 22);
  CHECK(parsed["spec"]["family"] == "ls");
  CHECK(parsed["elements"].size() == 22);
  CHECK(parsed["elements"][1].contains("blocks"));
  CHECK(parsed["elements"][1].contains("images"));
}

TEST_CASE("classify: json schema and eggbox") {
  const RunResult run =
      run_cli("classify --family ls --n 2 --relation dstar --format json");
  CHECK(run.exit_code == 0);
  const auto parsed = nlohmann::json::parse(run.out);
  CHECK(parsed["relation"] == "D*");
  CHECK(parsed["classes"].size() == 3);
  CHECK(parsed["classes"][1].size() == 4);

  const RunResult eggbox =
      run_cli("classify --family ls --n 2 --relation dstar --eggbox");
  CHECK(eggbox.exit_code == 0);
  CHECK(eggbox.out.find("3 x 2") != std::string::npos);

  const RunResult quotient = run_cli(
      "classify --family rls --n 3 --p 2 --relation rstar --format json");
  CHECK(quotient.exit_code == 0);
  const auto quotient_parsed = nlohmann::json::parse(quotient.out);
  // One singleton class is the zero.
  bool has_zero_class = false;
  for (const auto& cls : quotient_parsed["classes"]) {
    if (cls.size() == 1 && cls[0] == "0") {
      has_zero_class = true;
    }
  }
  CHECK(has_zero_class);
}

TEST_CASE("factorize json round-trips and verifies") {
  const RunResult run =
      run_cli("factorize --n 3 --map \"1,2->1;3->2\" --format json");
  CHECK(run.exit_code == 0);
  const auto parsed = nlohmann::json::parse(run.out);
  CHECK(parsed["verified"] == true);
  CHECK(parsed["certificate"] == "SAME_HEIGHT");
  CHECK(parsed["factors"].size() == 3);
  CHECK(parsed["case"].is_null());

  const RunResult raised = run_cli(
      "factorize --n 4 --map \"2->1\" --target-height 3 --format json");
  CHECK(raised.exit_code == 0);
  const auto raised_parsed = nlohmann::json::parse(raised.out);
  CHECK(raised_parsed["verified"] == true);
  CHECK(raised_parsed["certificate"] == "HEIGHT_DESCENT");
}

TEST_CASE("rank output and ssp brute-force labelling") {
  const RunResult run =
      run_cli("rank --family ls --n 3 --brute-force --format json");
  CHECK(run.exit_code == 0);
  const auto parsed = nlohmann::json::parse(run.out);
  CHECK(parsed["closed_form"] == 6);
  CHECK(parsed["verified_generates"] == true);
  CHECK(parsed["brute_force_rank"] == 6);
  CHECK(parsed["idempotents_only"] == true);

  const RunResult ssp = run_cli("rank --family ssp --n 3 --format json");
  CHECK(ssp.exit_code == 0);
  const auto ssp_parsed = nlohmann::json::parse(ssp.out);
  CHECK(ssp_parsed["closed_form"].is_null());
  CHECK(ssp_parsed["brute_force_rank"].is_number());
}

TEST_CASE("count tables carry the documented csv header") {
  const RunResult run = run_cli("count --what order --n 3 --format csv");
  CHECK(run.exit_code == 0);
  CHECK(run.out.rfind("n,family,count,formula,match\n", 0) == 0);
  CHECK(run.out.find("3,ls,22,22,yes") != std::string::npos);

  const RunResult schroeder =
      run_cli("count --what schroeder --n 10 --format csv");
  CHECK(schroeder.exit_code == 0);
  // Beyond the enumeration cap the table still shows the formula value.
  CHECK(schroeder.out.find("9,schroeder-large,-,206098,-") !=
        std::string::npos);
  CHECK(schroeder.out.find("10,schroeder-small,-,518859,-") !=
        std::string::npos);
}

TEST_CASE("verify runs the suites") {
  const RunResult counts = run_cli("verify --suite counts --n 3");
  CHECK(counts.exit_code == 0);
  CHECK(counts.out.find("PASS  C01") != std::string::npos);
  CHECK(counts.out.find("OK: 4/4 checks passed") != std::string::npos);

  const RunResult green_json =
      run_cli("verify --suite green --n 2 --format json");
  CHECK(green_json.exit_code == 0);
  const auto parsed = nlohmann::json::parse(green_json.out);
  CHECK(parsed["pass"] == true);
  CHECK(parsed["results"][0]["id"] == "C03");
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli("enumerate --family k --n 3").exit_code == 2);  // missing --p
  CHECK(run_cli("enumerate --family nope --n 3").exit_code == 2);
  CHECK(run_cli("enumerate --n 3").exit_code == 2);  // missing --family
  CHECK(run_cli("classify --family ls --n 2 --relation zstar").exit_code == 2);
  CHECK(run_cli("factorize --n 3 --map \"2->3\"").exit_code == 2);  // not a member
  CHECK(run_cli("bogus-subcommand").exit_code == 2);
  CHECK(run_cli("enumerate --family ls --n 3 --unknown-flag").exit_code == 2);
}

TEST_CASE("byte-identical output across runs") {
  const std::string args =
      "classify --family ss --n 3 --relation lstar --eggbox --format json";
  const RunResult first = run_cli(args);
  const RunResult second = run_cli(args);
  CHECK(first.exit_code == 0);
  CHECK(first.out == second.out);
  CHECK_FALSE(first.out.empty());
}
