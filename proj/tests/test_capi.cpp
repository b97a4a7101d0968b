#include <doctest.h>

#include <string>
#include <vector>

#include "unisub/capi.h"

namespace {

struct Pattern {
  us_pattern* handle = nullptr;
  ~Pattern() { us_pattern_free(handle); }
};

struct Certificate {
  us_certificate* handle = nullptr;
  ~Certificate() { us_certificate_free(handle); }
};

struct Report {
  us_flag_report* handle = nullptr;
  ~Report() { us_flag_report_free(handle); }
};

struct Owned {
  char* value = nullptr;
  ~Owned() { us_string_free(value); }
};

constexpr const char* kBitri4 =
    R"({"n": 4, "pairs": [[1,3],[1,4],[2,4],[3,1],[4,1],[4,2]]})";

}  // namespace

TEST_CASE("pattern parsing and validation codes") {
  Pattern p;
  REQUIRE(us_pattern_from_json(kBitri4, &p.handle) == US_OK);
  CHECK(us_pattern_n(p.handle) == 4);
  CHECK(us_pattern_is_odd(p.handle) == 0);
  CHECK(us_pattern_is_simple(p.handle) == 0);
  CHECK(us_pattern_is_bitriangular(p.handle) == 1);

  us_pattern* bad = nullptr;
  CHECK(us_pattern_from_json(R"({"n": 3, "pairs": [[1,2],[2,1]]})", &bad) ==
        US_E_WRONG_CARDINALITY);
  CHECK(us_pattern_from_json(R"({"n": 3, "pairs": [[1,1],[1,2],[1,3]]})", &bad) ==
        US_E_DIAGONAL_PAIR);
  CHECK(us_pattern_from_json(R"({"n": 3, "pairs": [[1,2],[1,2],[1,3]]})", &bad) ==
        US_E_DUPLICATE_PAIR);
  CHECK(us_pattern_from_json(R"({"n": 3, "pairs": [[1,7],[1,2],[1,3]]})", &bad) ==
        US_E_INDEX_RANGE);
  CHECK(us_pattern_from_json("not json", &bad) == US_E_PARSE);
  CHECK(std::string(us_last_error()).size() > 0);
}

TEST_CASE("certification through the C surface") {
  Pattern p;
  REQUIRE(us_pattern_from_json(kBitri4, &p.handle) == US_OK);

  Certificate cert;
  REQUIRE(us_certify(p.handle, 'A', &cert.handle) == US_OK);
  CHECK(std::string(us_certificate_verdict(cert.handle)) == "UniversalIff");
  CHECK(us_certificate_positive(cert.handle) == 1);

  Owned ci;
  REQUIRE(us_certificate_c_i(cert.handle, &ci.value) == US_OK);
  CHECK(std::string(ci.value) == "-12");

  Owned json;
  REQUIRE(us_certificate_json(cert.handle, &json.value) == US_OK);
  const std::string text = json.value;
  CHECK(text.find("\"C_I\": \"-12\"") != std::string::npos);
  CHECK(text.find("\"flag_count\": \"12\"") != std::string::npos);

  us_certificate* mismatch = nullptr;
  CHECK(us_certify(p.handle, 'B', &mismatch) == US_E_FAMILY_MISMATCH);
}

TEST_CASE("odd patterns certify against family B") {
  Pattern p;
  REQUIRE(us_pattern_from_json(R"({"n": 1, "pairs": [[1,2]], "odd": true})", &p.handle) ==
          US_OK);
  CHECK(us_pattern_is_odd(p.handle) == 1);

  Certificate cert;
  REQUIRE(us_certify(p.handle, 'B', &cert.handle) == US_OK);
  CHECK(std::string(us_certificate_verdict(cert.handle)) == "UniversalCertified");
  Owned ci;
  REQUIRE(us_certificate_c_i(cert.handle, &ci.value) == US_OK);
  CHECK(std::string(ci.value) == "1");
}

TEST_CASE("enumeration rows and summary") {
  us_enum_options options{};
  options.n = 3;
  options.family = 'A';
  options.filter = "none";

  std::vector<std::string> rows;
  auto collect = [](void* user, const char* row) -> int {
    static_cast<std::vector<std::string>*>(user)->push_back(row);
    return 0;
  };
  us_enum_summary summary{};
  REQUIRE(us_enumerate(&options, collect, &rows, &summary) == US_OK);
  CHECK(summary.rows == 20);
  CHECK(summary.simple == 8);
  CHECK(summary.zero_c_i == 0);
  REQUIRE(rows.size() == 20);
  // Mask 7 = slots {(1,2),(1,3),(2,1)}: neither simple nor bitriangular.
  CHECK(rows.front() == "7,0,0,3,UniversalCertified");

  options.n = 6;
  CHECK(us_enumerate(&options, collect, &rows, &summary) == US_E_BOUND_EXCEEDED);
  CHECK(us_last_error_payload_a() == 155117520);
}

TEST_CASE("verification through the C surface") {
  // diag(1,2) against the lower-triangular 2x2 pattern: two flags.
  const char* problem = R"({
    "matrix": [[[1,0],[0,0]],[[0,0],[2,0]]],
    "pattern": {"n": 2, "pairs": [[1,2]]},
    "seed": 7
  })";
  us_verify_options options{};
  options.jobs = 2;
  options.psi_samples = 50;

  Report report;
  REQUIRE(us_verify_json(problem, &options, &report.handle) == US_OK);
  CHECK(us_flag_report_count(report.handle) == 2);
  CHECK(us_flag_report_stable(report.handle) == 1);
  CHECK(us_flag_report_bitriangular(report.handle) == 1);
  CHECK(us_flag_report_match(report.handle) == 1);

  Owned json;
  REQUIRE(us_flag_report_json(report.handle, &json.value) == US_OK);
  CHECK(std::string(json.value).find("\"count\": 2") != std::string::npos);

  us_flag_report* bad = nullptr;
  CHECK(us_verify_json("{}", &options, &bad) == US_E_PARSE);
}

TEST_CASE("subspace verdicts from weight multisets") {
  Owned json;
  REQUIRE(us_subspace_verdict_json(
              R"({"group":"A","n":2,"weights":[[1,-1]]})", &json.value) == US_OK);
  std::string text = json.value;
  CHECK(text.find("\"verdict\": \"UniversalCertified\"") != std::string::npos);
  CHECK(text.find("\"C_V\": \"2\"") != std::string::npos);

  Owned other;
  CHECK(us_subspace_verdict_json(R"({"group":"A","n":2,"weights":[[0,0]]})", &other.value) ==
        US_E_ZERO_WEIGHT);
}

TEST_CASE("selftest is green and the fault injection trips it") {
  Owned table;
  int pass = -1;
  REQUIRE(us_selftest(2, 0, &table.value, &pass) == US_OK);
  CHECK(pass == 1);
  CHECK(std::string(table.value).find("FAIL") == std::string::npos);

  Owned corrupted;
  int pass2 = -1;
  REQUIRE(us_selftest(2, 1, &corrupted.value, &pass2) == US_OK);
  CHECK(pass2 == 0);
  CHECK(std::string(corrupted.value).find("FAIL") != std::string::npos);
}
