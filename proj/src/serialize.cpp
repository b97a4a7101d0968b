#include "unisub/serialize.hpp"

#include <json.hpp>

#include <sstream>

namespace unisub {

namespace {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

json pattern_pairs_json(const std::vector<IndexPair>& pairs) {
  json arr = json::array();
  for (const auto& [i, j] : pairs) arr.push_back({i, j});
  return arr;
}

std::vector<IndexPair> pairs_from_json(const json& arr) {
  std::vector<IndexPair> pairs;
  for (const auto& item : arr) {
    if (!item.is_array() || item.size() != 2) {
      throw Error(ErrorCode::ParseError, "pair entries must be [i, j] arrays");
    }
    const long i = item[0].get<long>();
    const long j = item[1].get<long>();
    if (i < 0 || j < 0) throw Error(ErrorCode::ParseError, "pair indices must be positive");
    pairs.emplace_back(static_cast<unsigned>(i), static_cast<unsigned>(j));
  }
  return pairs;
}

ordered verdict_body(const UniversalityVerdict& verdict) {
  ordered out;
  out["f_V"] = to_text(verdict.f_V);
  out["degree"] = verdict.degree;
  out["m"] = verdict.m;
  out["in_ideal"] = verdict.in_ideal;
  if (verdict.characteristic_number) {
    out["C_V"] = to_decimal(*verdict.characteristic_number);
  }
  out["verdict"] = verdict_name(verdict.verdict);
  return out;
}

ordered complex_json(const std::complex<double>& z) {
  return ordered::array({z.real(), z.imag()});
}

ordered matrix_json(const Eigen::MatrixXcd& m) {
  ordered rows = ordered::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    ordered row = ordered::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

std::string polynomial_json(const Polynomial& p) {
  ordered arr = ordered::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    ordered term;
    term["coeff"] = it->second.get_str();
    term["exps"] = it->first.exps;
    arr.push_back(term);
  }
  return arr.dump();
}

ParsedPattern parse_pattern_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("pattern JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("pairs")) {
    throw Error(ErrorCode::ParseError, "pattern JSON needs \"n\" and \"pairs\"");
  }
  ParsedPattern parsed;
  const unsigned n = doc["n"].get<unsigned>();
  const auto pairs = pairs_from_json(doc["pairs"]);
  parsed.odd = doc.value("odd", false);
  if (parsed.odd) {
    parsed.odd_pattern = validate_odd_pattern(n, pairs);
    parsed.pattern = parsed.odd_pattern->inner();
  } else {
    parsed.pattern = validate_pattern(n, pairs);
  }
  return parsed;
}

std::string pattern_json(const ZeroPattern& p) {
  ordered out;
  out["n"] = p.n;
  out["pairs"] = pattern_pairs_json(p.pairs);
  return out.dump();
}

std::string odd_pattern_json(const OddPattern& p) {
  ordered out;
  out["n"] = p.n;
  out["pairs"] = pattern_pairs_json(p.pairs);
  out["odd"] = true;
  return out.dump();
}

std::string certificate_json(const PatternCertificate& cert) {
  ordered out;
  ordered pattern;
  if (cert.odd) {
    pattern["n"] = cert.odd->n;
    pattern["pairs"] = pattern_pairs_json(cert.odd->pairs);
    pattern["odd"] = true;
  } else {
    pattern["n"] = cert.pattern.n;
    pattern["pairs"] = pattern_pairs_json(cert.pattern.pairs);
    pattern["odd"] = false;
  }
  out["pattern"] = pattern;
  out["family"] = std::string(1, family_letter(cert.family));
  out["simple"] = cert.simple;
  out["bitriangular"] = cert.bitriangular;
  out["lambda_I"] = to_text(cert.lambda_I);
  out["C_I"] = cert.C_I.get_str();
  out["C_V"] = cert.C_V.get_str();
  out["verdict"] = verdict_name(cert.verdict);
  if (cert.predicted_flag_count) {
    out["flag_count"] = cert.predicted_flag_count->get_str();
  }
  return out.dump(2);
}

WeightMultiset parse_weights_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("weights JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("group") || !doc.contains("n") ||
      !doc.contains("weights")) {
    throw Error(ErrorCode::ParseError, "weights JSON needs \"group\", \"n\", \"weights\"");
  }
  WeightMultiset ws;
  const std::string letter = doc["group"].get<std::string>();
  if (letter.size() != 1) throw Error(ErrorCode::ParseError, "group must be one of A,B,C,D");
  ws.group.family = family_from_letter(letter[0]);
  ws.group.rank = doc["n"].get<unsigned>();
  for (const auto& entry : doc["weights"]) {
    LinearForm w(ws.group.rank);
    if (!entry.is_array() || entry.size() != ws.group.rank) {
      throw Error(ErrorCode::ParseError, "each weight must list n coefficients");
    }
    for (unsigned i = 0; i < ws.group.rank; ++i) w.coeffs[i] = entry[i].get<std::int64_t>();
    ws.weights.push_back(std::move(w));
  }
  validate_weights(ws);
  return ws;
}

std::string verdict_json(const UniversalityVerdict& verdict) {
  return verdict_body(verdict).dump(2);
}

FlagProblem parse_problem_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("problem JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("matrix") || !doc.contains("pattern")) {
    throw Error(ErrorCode::ParseError, "problem JSON needs \"matrix\" and \"pattern\"");
  }
  FlagProblem problem;
  const auto& rows = doc["matrix"];
  if (!rows.is_array() || rows.empty()) {
    throw Error(ErrorCode::ParseError, "matrix must be a nonempty array of rows");
  }
  const std::size_t n = rows.size();
  problem.n = static_cast<unsigned>(n);
  problem.matrix.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || row.size() != n) {
      throw Error(ErrorCode::ParseError, "matrix rows must all have length n");
    }
    for (std::size_t j = 0; j < n; ++j) {
      const auto& cell = row[j];
      if (!cell.is_array() || cell.size() != 2) {
        throw Error(ErrorCode::ParseError, "matrix entries must be [re, im] pairs");
      }
      problem.matrix(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          std::complex<double>(cell[0].get<double>(), cell[1].get<double>());
    }
  }
  const ParsedPattern parsed = parse_pattern_json(doc["pattern"].dump());
  if (parsed.odd) {
    throw Error(ErrorCode::FamilyMismatch, "flag search runs on plain (complex) patterns only");
  }
  problem.pattern = parsed.pattern;
  problem.tolerance = doc.value("tolerance", kDefaultTolerance);
  problem.restarts = doc.value("restarts", std::uint64_t{0});
  problem.rng_seed = doc.value("seed", kDefaultSeed);
  validate_problem(problem);
  return problem;
}

VerifyReport run_verify(const FlagProblem& problem, unsigned jobs, std::uint64_t psi_samples) {
  validate_problem(problem);
  VerifyReport report;
  report.count_report = count_flags_report(problem, jobs);
  report.psi_report = psi_sign_scan(problem.pattern, psi_samples, problem.rng_seed);
  report.bitriangular = is_bitriangular(problem.pattern);
  if (report.bitriangular) {
    report.expected_count = abs(characteristic_number_I(problem.pattern));
    const bool count_ok =
        report.count_report.stable &&
        BigInt(static_cast<unsigned long>(report.count_report.count())) == report.expected_count;
    report.match = count_ok ? 1 : 0;
  }
  return report;
}

std::string verify_report_json(const FlagProblem& problem, const VerifyReport& report) {
  ordered out;
  out["n"] = problem.n;
  out["pattern"] = ordered::parse(pattern_json(problem.pattern));
  out["tolerance"] = problem.tolerance;
  out["seed"] = problem.rng_seed;
  out["restarts_base"] = problem.restart_budget();
  out["restarts_used"] = report.count_report.restarts_used;
  out["stage_counts"] = report.count_report.stage_counts;
  out["stable"] = report.count_report.stable;
  out["count"] = report.count_report.count();
  ordered flags = ordered::array();
  for (const DistinctFlag& flag : report.count_report.flags) {
    ordered f;
    ordered sig = ordered::array();
    for (const auto& z : flag.solution.signature) sig.push_back(complex_json(z));
    f["signature"] = sig;
    f["residual"] = flag.solution.residual;
    f["first_restart"] = flag.first_restart;
    f["transversal"] = flag.transversal;
    f["conjugator"] = matrix_json(flag.solution.conjugator);
    flags.push_back(f);
  }
  out["flags"] = flags;
  ordered psi;
  psi["samples"] = report.psi_report.samples;
  psi["plus"] = report.psi_report.plus;
  psi["minus"] = report.psi_report.minus;
  psi["zero"] = report.psi_report.zero;
  psi["sign_constant"] = report.psi_report.sign_constant;
  out["psi_scan"] = psi;
  out["bitriangular"] = report.bitriangular;
  if (report.bitriangular) {
    out["expected_count"] = report.expected_count.get_str();
    out["match"] = report.match == 1;
  }
  return out.dump(2);
}

std::string enumeration_csv_header() { return "bitmask,simple,bitriangular,C_I,verdict"; }

std::string enumeration_csv_row(std::uint64_t mask, const PatternCertificate& cert) {
  std::ostringstream os;
  os << mask << ',' << (cert.simple ? 1 : 0) << ',' << (cert.bitriangular ? 1 : 0) << ','
     << cert.C_I.get_str() << ',' << verdict_name(cert.verdict);
  return os.str();
}

}  // namespace unisub
