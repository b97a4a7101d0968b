// End-to-end checks of the installed command surface. Invoked as
//   test_cli <path-to-unisub-binary> <path-to-data-dir>

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string g_binary;
std::string g_data;

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr interleaved
};

RunResult run(const std::string& args) {
  const std::string command = g_binary + " " + args + " 2>&1";
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer;
  while (std::size_t got = fread(buffer.data(), 1, buffer.size(), pipe)) {
    result.output.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

TEST_CASE("certify paper examples") {
  const RunResult bit = run("certify --family A " + g_data + "/bitriangular4.json");
  CHECK(bit.exit_code == 0);
  CHECK(bit.output.find("\"C_I\": \"-12\"") != std::string::npos);
  CHECK(bit.output.find("\"flag_count\": \"12\"") != std::string::npos);

  const RunResult cyc = run("certify --family A " + g_data + "/cyclic3.json");
  CHECK(cyc.exit_code == 0);
  CHECK(cyc.output.find("\"C_I\": \"6\"") != std::string::npos);
  CHECK(cyc.output.find("UniversalCertified") != std::string::npos);

  const RunResult so3 = run("certify --family B " + g_data + "/so3_odd.json");
  CHECK(so3.exit_code == 0);
  CHECK(so3.output.find("\"C_V\": \"2\"") != std::string::npos);
}

TEST_CASE("certify exit codes partition outcomes") {
  // Wrong cardinality: 5 pairs at n=4.
  const std::string bad_path = "/tmp/unisub_bad_pattern.json";
  {
    std::ofstream out(bad_path);
    out << R"({"n": 4, "pairs": [[1,3],[1,4],[2,4],[3,1],[4,1]]})";
  }
  const RunResult bad = run("certify --family A " + bad_path);
  CHECK(bad.exit_code == 2);
  CHECK(bad.output.find("WrongCardinality") != std::string::npos);

  const RunResult zero = run("certify --family A " + g_data + "/zero_ci4.json");
  CHECK(zero.exit_code == 3);
  CHECK(zero.output.find("\"C_I\": \"0\"") != std::string::npos);

  const RunResult missing = run("certify --family A /tmp/does_not_exist.json");
  CHECK(missing.exit_code == 2);
}

TEST_CASE("certify writes the certificate file") {
  const std::string out_path = "/tmp/unisub_cert.json";
  std::remove(out_path.c_str());
  const RunResult r =
      run("certify --family A --out " + out_path + " " + g_data + "/i0_3.json");
  CHECK(r.exit_code == 0);
  const std::string payload = slurp(out_path);
  CHECK(payload.find("\"C_I\": \"6\"") != std::string::npos);

  const RunResult wrong_ext =
      run("certify --family A --out /tmp/cert.csv " + g_data + "/i0_3.json");
  CHECK(wrong_ext.exit_code == 2);
}

TEST_CASE("enumerate") {
  const RunResult n3 = run("enumerate --n 3 --family A");
  CHECK(n3.exit_code == 0);
  CHECK(n3.output.find("bitmask,simple,bitriangular,C_I,verdict") != std::string::npos);
  CHECK(n3.output.find("total=20 simple=8 bitriangular=6 zero_C_I=0") != std::string::npos);

  const RunResult simple = run("enumerate --n 3 --family A --filter simple");
  CHECK(simple.exit_code == 0);
  CHECK(simple.output.find("total=8") != std::string::npos);

  const RunResult gated = run("enumerate --n 6 --family A");
  CHECK(gated.exit_code == 4);
  CHECK(gated.output.find("155117520") != std::string::npos);
}

TEST_CASE("enumerate output is byte-identical across jobs") {
  const std::string a = "/tmp/unisub_enum_a.csv";
  const std::string b = "/tmp/unisub_enum_b.csv";
  CHECK(run("enumerate --n 4 --family A --jobs 1 --out " + a).exit_code == 0);
  CHECK(run("enumerate --n 4 --family A --jobs 4 --out " + b).exit_code == 0);
  const std::string left = slurp(a);
  CHECK_FALSE(left.empty());
  CHECK(left == slurp(b));
}

TEST_CASE("verify") {
  const RunResult schur = run("verify --jobs 2 " + g_data + "/verify_schur2.json");
  CHECK(schur.exit_code == 0);
  CHECK(schur.output.find("count=2") != std::string::npos);
  CHECK(schur.output.find("MATCH") != std::string::npos);

  // Identical config + seed must produce byte-identical reports.
  const std::string a = "/tmp/unisub_verify_a.json";
  const std::string b = "/tmp/unisub_verify_b.json";
  CHECK(run("verify --jobs 1 --out " + a + " " + g_data + "/verify_schur2.json").exit_code == 0);
  CHECK(run("verify --jobs 4 --out " + b + " " + g_data + "/verify_schur2.json").exit_code == 0);
  const std::string left = slurp(a);
  CHECK_FALSE(left.empty());
  CHECK(left == slurp(b));
}

TEST_CASE("selftest") {
  const RunResult ok = run("selftest --n-max 2");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("FAIL") == std::string::npos);

  const RunResult fault = run("selftest --n-max 2 --inject-fault");
  CHECK(fault.exit_code != 0);
  CHECK(fault.output.find("FAIL") != std::string::npos);
}

int main(int argc, char** argv) {
  if (argc < 3) {
    std::fprintf(stderr, "usage: test_cli <unisub-binary> <data-dir>\n");
    return 2;
  }
  g_binary = argv[1];
  g_data = argv[2];
  doctest::Context context;
  return context.run();
}
