#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

namespace {

struct CliResult {
  int exit_code;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string("\"") + CIRCNORM_CLI_PATH + "\" " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return CliResult{WIFEXITED(status) ? WEXITSTATUS(status) : -1, std::move(out)};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) out.push_back(line);
  return out;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string field;
  while (std::getline(is, field, sep)) out.push_back(field);
  return out;
}

}  // namespace

TEST_CASE("cli: exact prints the frozen contract lines") {
  CHECK(run_cli("exact --n 3 --a 1 --b 1 --p 4").out == "EXACT 3 (THM3)\n");
  CHECK(run_cli("exact --n 3 --a -2 --b 1 --p 2").out == "EXACT 3 (THM2_CASE2)\n");
  CHECK(run_cli("exact --n 3 --a -2 --b 1 --p 4").out ==
        "INTERVAL [3, 3.46410161513775] (THM5)\n");
  CHECK(run_cli("exact --n 3 --a -2 --b 1 --p 1").out == "EXACT 4 (INSPECTION)\n");
  CHECK(run_cli("exact --n 3 --a -2 --b 1 --p inf").out == "EXACT 4 (INSPECTION)\n");
  CHECK(run_cli("exact --n 1 --a -9 --b 0 --p 3").out == "EXACT 9 (INSPECTION)\n");
  CHECK(run_cli("exact --n 5 --a 0 --b 2 --p 7").out == "EXACT 8 (THM3)\n");
  CHECK(run_cli("exact --n 3 --a 1 --b 1 --p 4").exit_code == 0);
}

TEST_CASE("cli: argument failures exit with 2") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("bogus").exit_code == 2);
  CHECK(run_cli("exact --n 0 --a 1 --b 1 --p 2").exit_code == 2);
  CHECK(run_cli("exact --n 3 --a 1 --b -1 --p 2").exit_code == 2);
  CHECK(run_cli("exact --n 3 --a 1 --b 1 --p 0.5").exit_code == 2);
  CHECK(run_cli("exact --n 3 --a 1 --b 1 --p nope").exit_code == 2);
  CHECK(run_cli("exact --n 3 --a 1 --b 1").exit_code == 2);
  CHECK(run_cli("estimate --p 3").exit_code == 2);
  CHECK(run_cli("estimate --first-row 1,2 --n 3 --a 1 --b 1 --p 3").exit_code == 2);
  CHECK(run_cli("estimate --n 3 --a 1 --b 1 --p 3 --restarts 0").exit_code == 2);
  CHECK(run_cli("sweep --n 4 --a -1 --b 1 --p-min 2 --p-max 8 --p-steps 3 --format xml")
            .exit_code == 2);
  CHECK(run_cli("sweep --n 4 --a -1 --b 1 --p-min 1.5 --p-max 8 --p-steps 3").exit_code == 2);
  CHECK(run_cli("verify --max-n 0").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("cli: estimate output shape and determinism") {
  const CliResult r = run_cli("estimate --n 3 --a 1 --b 1 --p 4 --witness");
  CHECK(r.exit_code == 0);
  const std::vector<std::string> ls = lines(r.out);
  REQUIRE(ls.size() == 5);
  CHECK(ls[0] == "value 3");
  CHECK(ls[1] == "converged true");
  CHECK(ls[2].rfind("iterations ", 0) == 0);
  CHECK(ls[3] == "restarts 18");
  CHECK(ls[4].rfind("witness ", 0) == 0);
  CHECK(split(ls[4].substr(8), ',').size() == 3);

  // byte-identical on repeat, same seed
  CHECK(run_cli("estimate --n 3 --a 1 --b 1 --p 4 --witness").out == r.out);

  const CliResult row = run_cli("estimate --first-row=-2,1,1 --p 2");
  CHECK(row.exit_code == 0);
  CHECK(lines(row.out)[0] == "value 3");

  const CliResult seeded = run_cli("estimate --n 6 --a -1 --b 1 --p 3 --seed 9 --restarts 2");
  CHECK(seeded.exit_code == 0);
  CHECK(lines(seeded.out)[0].rfind("value 4", 0) == 0);
}

TEST_CASE("cli: sweep csv structure") {
  const CliResult r = run_cli("sweep --n 3 --a -2 --b 1 --p-min 2 --p-max 16 --p-steps 4");
  CHECK(r.exit_code == 0);
  const std::vector<std::string> ls = lines(r.out);
  REQUIRE(ls.size() == 5);
  CHECK(ls[0] ==
        "n,a,b,p,lower,upper_thm4,upper_thm5,upper_combined,estimate,gap_ratio,certificate");

  // geometric grid from 2 to 16 in 4 steps: 2, 4, 8, 16
  const double want_p[] = {2.0, 4.0, 8.0, 16.0};
  for (int i = 1; i <= 4; ++i) {
    const std::vector<std::string> f = split(ls[static_cast<std::size_t>(i)], ',');
    REQUIRE(f.size() == 11);
    CHECK(std::stoi(f[0]) == 3);
    CHECK(std::stod(f[1]) == -2.0);
    CHECK(std::stod(f[2]) == 1.0);
    CHECK(std::stod(f[3]) == doctest::Approx(want_p[i - 1]).epsilon(1e-12));
    const double lower = std::stod(f[4]);
    const double thm4 = std::stod(f[5]);
    const double thm5 = std::stod(f[6]);
    const double combined = std::stod(f[7]);
    const double estimate = std::stod(f[8]);
    const double gap = std::stod(f[9]);
    CHECK(lower == 3.0);
    CHECK(thm5 <= thm4 + 1e-12);
    CHECK(combined == doctest::Approx(std::min(thm4, thm5)).epsilon(1e-12));
    CHECK(estimate >= lower - 1e-9);
    CHECK(estimate <= combined + 1e-8);
    CHECK(gap == doctest::Approx(combined / lower).epsilon(1e-12));
  }

  // the p = 2 row collapses to the exact spectral norm
  const std::vector<std::string> first = split(ls[1], ',');
  CHECK(std::stod(first[7]) == 3.0);
  CHECK(std::stod(first[9]) == 1.0);
  CHECK(first[10] == "THM2_CASE2");
  CHECK(split(ls[2], ',')[10] == "THM5");
}

TEST_CASE("cli: sweep json parses and round-trips") {
  const CliResult r =
      run_cli("sweep --n 3 --a -2 --b 1 --p-min 2 --p-max 8 --p-steps 3 --format json");
  CHECK(r.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(r.out);
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 3);
  for (const nlohmann::json& row : doc) {
    CHECK(row["n"] == 3);
    CHECK(row["a"] == -2.0);
    CHECK(row["b"] == 1.0);
    CHECK(row["lower"].get<double>() == 3.0);
    CHECK(row["upper_combined"].get<double>() <= row["upper_thm4"].get<double>() + 1e-12);
  }
  CHECK(doc[0]["p"] == 2.0);
  CHECK(doc[0]["certificate"] == "THM2_CASE2");
  CHECK(doc[1]["p"].get<double>() == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(doc[2]["p"] == 8.0);
  CHECK(doc[2]["certificate"] == "THM5");
  const double want_thm5 = std::pow(3.0, 0.25) * std::pow(4.0, 0.75);
  CHECK(doc[2]["upper_thm5"].get<double>() == doctest::Approx(want_thm5).epsilon(1e-12));
}

TEST_CASE("cli: single-point sweep") {
  const CliResult r = run_cli("sweep --n 4 --a -1 --b 1 --p-min 3 --p-max 3 --p-steps 1");
  CHECK(r.exit_code == 0);
  const std::vector<std::string> ls = lines(r.out);
  REQUIRE(ls.size() == 2);
  CHECK(std::stod(split(ls[1], ',')[3]) == 3.0);
}

TEST_CASE("cli: verify runs clean") {
  const CliResult r = run_cli("verify --max-n 8 --seed 3 --cases 40");
  CHECK(r.exit_code == 0);
  const std::vector<std::string> ls = lines(r.out);
  REQUIRE(ls.size() == 14);
  for (std::size_t i = 0; i + 1 < ls.size(); ++i)
    CHECK(ls[i].find(" PASS") != std::string::npos);
  CHECK(ls.back().rfind("verify: PASS (13 suites", 0) == 0);
}
