#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef FOCKIDEAL_CLI
#error "FOCKIDEAL_CLI must point at the built binary"
#endif
#ifndef FOCKIDEAL_DATA
#error "FOCKIDEAL_DATA must point at the fixture directory"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(FOCKIDEAL_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof(buf), pipe)) output.append(buf, n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

std::string data(const std::string& name) { return std::string(FOCKIDEAL_DATA) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("spectrum of a single atom") {
  const auto res = run_cli("spectrum --measure " + data("one_atom.json"));
  CHECK(res.exit_code == 0);
  CHECK(res.output == "1\n");
}

TEST_CASE("spectrum of the two-atom example") {
  const auto res = run_cli("spectrum --measure " + data("two_atoms.json"));
  CHECK(res.exit_code == 0);
  std::istringstream in(res.output);
  double top = 0.0, bottom = 0.0;
  in >> top >> bottom;
  CHECK(top == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(bottom == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("spectrum of the flat density at degree three") {
  const auto res = run_cli("spectrum --measure " + data("flat.json") + " --degree 3");
  CHECK(res.exit_code == 0);
  // four rows, each pi
  int rows = 0;
  std::istringstream in(res.output);
  std::string line;
  while (std::getline(in, line)) {
    CHECK(line == "3.1415926535897931");
    ++rows;
  }
  CHECK(rows == 4);
}

TEST_CASE("chain output and scaling") {
  const std::string base = "chain --measure " + data("one_atom.json") + " --r 1";
  const auto res = run_cli(base);
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("scenario_id,theorem,") == 0);
  // Unit ratio for the single atom at the origin.
  CHECK(res.output.find(",chain,1,1,") != std::string::npos);
  CHECK(res.output.find(",finite,") != std::string::npos);

  const auto scaled = run_cli(base + " --scale 2 --s 1");
  CHECK(scaled.exit_code == 0);
  // lhs column for the unit atom becomes 2 when the symbol doubles.
  std::istringstream rows(scaled.output);
  std::string header, row;
  std::getline(rows, header);
  std::getline(rows, row);
  std::istringstream cells(row);
  std::string cell;
  for (int i = 0; i < 10; ++i) std::getline(cells, cell, ',');  // lhs is column 10
  CHECK(std::stod(cell) == doctest::Approx(2.0).epsilon(1e-12));

  const auto structured = run_cli(base + " --format structured");
  CHECK(structured.exit_code == 0);
  CHECK(structured.output.find("theorem: chain") != std::string::npos);
}

TEST_CASE("berezin sampling is deterministic") {
  const std::string cmd = "berezin --measure " + data("two_atoms.json") + " --samples 10 --seed 5";
  const auto a = run_cli(cmd);
  const auto b = run_cli(cmd);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output.find("berezin,heat,rel_err") != std::string::npos);
}

TEST_CASE("exit codes") {
  // Usage: missing required --r.
  CHECK(run_cli("chain --measure " + data("one_atom.json")).exit_code == 1);
  // Usage: unknown command.
  CHECK(run_cli("bogus").exit_code == 1);
  // Input: malformed measure file.
  CHECK(run_cli("spectrum --measure " + data("corrupt.json")).exit_code == 2);
  // Input error beats any suite work in verify-adjacent commands.
  CHECK(run_cli("berezin --measure " + data("corrupt.json")).exit_code == 2);
  // Out-of-range power is rejected at parse time.
  CHECK(run_cli("chain --measure " + data("one_atom.json") + " --r 1 --s 1.5").exit_code == 1);
}

TEST_CASE("single verification suite through the CLI") {
  const auto res = run_cli("verify --suite kernel-identity");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("kernel-identity") != std::string::npos);
  CHECK(res.output.find("pass") == 0);
}

TEST_CASE("targeted verification of one measure") {
  const auto res = run_cli("verify --measure " + data("two_atoms.json") +
                           " --r 1 --s 0.5 --rho 0.5 --gamma 1 --m 3 --phi kyfan:2");
  // The sandwich, chain and partition rows pass; the domination row fails
  // against its stated constant (mass near a box corner), so the exit is 3.
  CHECK(res.exit_code == 3);
  CHECK(res.output.find("scenario_id,theorem,") == 0);
  CHECK(res.output.find("sandwich") != std::string::npos);
  CHECK(res.output.find(",pass,") != std::string::npos);
  CHECK(res.output.find(",finite,") != std::string::npos);
  // A corrupted measure file is rejected before any check runs.
  CHECK(run_cli("verify --measure " + data("corrupt.json")).exit_code == 2);
  // A lattice truncation below the certified minimum is a numeric failure
  // that names the adequate shell count.
  const auto small = run_cli("verify --measure " + data("two_atoms.json") +
                             " --r 1 --max-shell 1");
  CHECK(small.exit_code == 3);
  CHECK(small.output.find("minimal adequate shell count") != std::string::npos);
}

TEST_CASE("output files are written byte-identically") {
  const std::string out1 = std::string(FOCKIDEAL_DATA) + "/tmp_out1.csv";
  const std::string out2 = std::string(FOCKIDEAL_DATA) + "/tmp_out2.csv";
  const std::string cmd =
      "chain --measure " + data("two_atoms.json") + " --r 1 --phi kyfan:2 --out ";
  CHECK(run_cli(cmd + out1).exit_code == 0);
  CHECK(run_cli(cmd + out2).exit_code == 0);
  CHECK(slurp(out1) == slurp(out2));
  std::remove(out1.c_str());
  std::remove(out2.c_str());
}
