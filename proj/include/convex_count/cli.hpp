#pragma once

#include "convex_count/bigint.hpp"
#include "convex_count/ht_matrix.hpp"
#include "convex_count/polynomial.hpp"
#include "convex_count/production.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace convex_count::cli {

inline constexpr int kFormatVersion = 1;

enum class Format { Table, Csv, Json, Bfile };

Format parse_format(const std::string& name);

/// Everything a command prints, in one serializable value. Big integers are
/// decimal strings in the JSON form.
struct OutputRecord {
  int format_version = kFormatVersion;
  std::string command;
  std::string cls;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  nlohmann::ordered_json payload = nlohmann::ordered_json::object();

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

nlohmann::ordered_json to_json(const OutputRecord& r);
OutputRecord record_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json big_array(const std::vector<BigInt>& v);
std::vector<BigInt> big_array_from(const nlohmann::ordered_json& j);

// Payload builders.
nlohmann::ordered_json matrix_payload(const HTMatrix& m);
nlohmann::ordered_json counts_payload(const std::vector<production::LevelCount>& levels);
nlohmann::ordered_json polynomial_payload(const IntPolynomial& p);

// Renderers. Each returns the full text including the trailing newline.
std::string render_matrix(const OutputRecord& r, Format f);
std::string render_counts(const OutputRecord& r, Format f);
std::string render_charpoly(const OutputRecord& r, Format f);
std::string render_eigen(const OutputRecord& r, Format f);

/// Resolves the c_2, c_3, ... input of the relation matrix. `name` is one of
/// connected, trees, paths; trees and paths come from the brute-force oracle
/// and honour `force` past its guard. Returns c_2 .. c_{last}.
std::vector<BigInt> relation_sequence(const std::string& name, int last, bool force);

/// Parses "1,4,23" into c_2, c_3, ...
std::vector<BigInt> parse_sequence_list(const std::string& text);

struct CheckResult {
  std::string name;
  bool passed = true;
  /// First counterexample on failure, summary otherwise.
  std::string detail;
};

struct VerifyLimits {
  int n_max = 7;
  /// Bound for the lemma suite.
  int max = 12;
  unsigned workers = 1;
  bool force = false;
};

struct VerifyReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool all_passed() const;
};

/// Suites: vectors, charpoly, eigen, oracle, lemma1, relation.
VerifyReport run_verify(const std::string& suite, const VerifyLimits& limits);

std::string render_report(const VerifyReport& report, Format f);

}  // namespace convex_count::cli
