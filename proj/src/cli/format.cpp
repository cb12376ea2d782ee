#include "convex_count/cli.hpp"

#include "convex_count/oracle.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace convex_count::cli {

using json = nlohmann::ordered_json;

Format parse_format(const std::string& name) {
  if (name == "table") return Format::Table;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  if (name == "bfile") return Format::Bfile;
  throw std::invalid_argument("unknown format '" + name + "' (expected table, csv, json, bfile)");
}

json to_json(const OutputRecord& r) {
  json j;
  j["format_version"] = r.format_version;
  j["command"] = r.command;
  j["class"] = r.cls;
  j["parameters"] = r.parameters;
  j["payload"] = r.payload;
  return j;
}

OutputRecord record_from_json(const json& j) {
  OutputRecord r;
  r.format_version = j.at("format_version").get<int>();
  r.command = j.at("command").get<std::string>();
  r.cls = j.at("class").get<std::string>();
  r.parameters = j.at("parameters");
  r.payload = j.at("payload");
  return r;
}

json big_array(const std::vector<BigInt>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_decimal(x));
  return a;
}

std::vector<BigInt> big_array_from(const json& j) {
  std::vector<BigInt> out;
  for (const auto& x : j) out.push_back(from_decimal(x.get<std::string>()));
  return out;
}

json matrix_payload(const HTMatrix& m) {
  json rows = json::array();
  for (const auto& row : m.dense()) rows.push_back(big_array(row));
  return json{{"size", m.size()}, {"rows", rows}};
}

json counts_payload(const std::vector<production::LevelCount>& levels) {
  json out = json::array();
  for (const auto& l : levels) {
    out.push_back(json{{"level", l.level}, {"vector", big_array(l.vector.entries)}, {"total", to_decimal(l.total)}});
  }
  return json{{"levels", out}};
}

json polynomial_payload(const IntPolynomial& p) {
  std::vector<BigInt> coeffs = p.coefficients();
  if (coeffs.empty()) coeffs.push_back(0);
  return json{{"degree", p.degree()}, {"coefficients", big_array(coeffs)}, {"text", p.to_string()}};
}

namespace {

std::string json_text(const OutputRecord& r) { return to_json(r).dump(2) + "\n"; }

std::string join(const std::vector<std::string>& cells, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += sep;
    out += cells[i];
  }
  return out;
}

std::vector<std::string> strings(const json& a) {
  std::vector<std::string> out;
  for (const auto& x : a) out.push_back(x.get<std::string>());
  return out;
}

std::string aligned(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (row.size() > width.size()) width.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream os;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) line += "  ";
      line += std::string(width[c] - row[c].size(), ' ') + row[c];
    }
    os << line << "\n";
  }
  return os.str();
}

[[noreturn]] void no_bfile(const std::string& what) {
  throw std::invalid_argument("--bfile applies to counts only, not " + what);
}

}  // namespace

std::string render_matrix(const OutputRecord& r, Format f) {
  if (f == Format::Json) return json_text(r);
  if (f == Format::Bfile) no_bfile("matrix");
  std::vector<std::vector<std::string>> rows;
  for (const auto& row : r.payload.at("rows")) rows.push_back(strings(row));
  if (f == Format::Csv) {
    std::string out;
    for (const auto& row : rows) out += join(row, ",") + "\n";
    return out;
  }
  return aligned(rows);
}

std::string render_counts(const OutputRecord& r, Format f) {
  if (f == Format::Json) return json_text(r);
  const auto& levels = r.payload.at("levels");
  std::string out;
  if (f == Format::Bfile) {
    for (const auto& l : levels) out += std::to_string(l.at("level").get<int>()) + " " + l.at("total").get<std::string>() + "\n";
    return out;
  }
  if (f == Format::Csv) {
    out = "level,total,vector\n";
    for (const auto& l : levels) {
      out += std::to_string(l.at("level").get<int>()) + "," + l.at("total").get<std::string>() + ",\"" +
             join(strings(l.at("vector")), " ") + "\"\n";
    }
    return out;
  }
  std::vector<std::vector<std::string>> rows{{"level", "total", "vector"}};
  for (const auto& l : levels) {
    rows.push_back({std::to_string(l.at("level").get<int>()), l.at("total").get<std::string>(),
                    "(" + join(strings(l.at("vector")), ", ") + ")"});
  }
  // The vector column is left-aligned: render the first two aligned, append the third.
  std::vector<std::vector<std::string>> head;
  for (const auto& row : rows) head.push_back({row[0], row[1]});
  std::istringstream lines(aligned(head));
  std::string line;
  for (const auto& row : rows) {
    std::getline(lines, line);
    out += line + "  " + row[2] + "\n";
  }
  return out;
}

std::string render_charpoly(const OutputRecord& r, Format f) {
  if (f == Format::Json) return json_text(r);
  if (f == Format::Bfile) no_bfile("charpoly");
  const auto coeffs = strings(r.payload.at("coefficients"));
  if (f == Format::Csv) {
    std::string out = "power,coefficient\n";
    for (std::size_t i = 0; i < coeffs.size(); ++i) out += std::to_string(i) + "," + coeffs[i] + "\n";
    return out;
  }
  return r.payload.at("text").get<std::string>() + "\ncoefficients (low to high): " + join(coeffs, " ") + "\n";
}

std::string render_eigen(const OutputRecord& r, Format f) {
  if (f == Format::Json) return json_text(r);
  if (f == Format::Bfile) no_bfile("eigen");
  const auto& p = r.payload;
  const auto vec = strings(p.at("vector"));
  if (f == Format::Csv) {
    std::string out = "field,value\n";
    out += "dominant_eigenvalue," + p.at("dominant_eigenvalue").get<std::string>() + "\n";
    out += "real_root_count," + std::to_string(p.at("real_root_count").get<int>()) + "\n";
    out += "residual," + p.at("residual").get<std::string>() + "\n";
    for (std::size_t i = 0; i < vec.size(); ++i) {
      out += "x_" + std::to_string(vec.size() - 1 - i) + "," + vec[i] + "\n";
    }
    return out;
  }
  std::string out;
  out += "dominant eigenvalue: " + p.at("dominant_eigenvalue").get<std::string>() + "\n";
  out += "distinct real roots: " + std::to_string(p.at("real_root_count").get<int>()) + "\n";
  out += "relative residual:   " + p.at("residual").get<std::string>() + "\n";
  out += "eigenvector (x_{n-1} .. x_0):\n";
  for (const auto& x : vec) out += "  " + x + "\n";
  return out;
}

std::vector<BigInt> relation_sequence(const std::string& name, int last, bool force) {
  std::vector<BigInt> c;
  if (last < 2) return c;
  if (name == "connected") {
    for (const auto& l : production::count_sequence(production::GraphClassSpec::connected(), last)) c.push_back(l.total);
    return c;
  }
  oracle::SpanningKind kind;
  if (name == "trees") {
    kind = oracle::SpanningKind::Tree;
  } else if (name == "paths") {
    kind = oracle::SpanningKind::Path;
  } else {
    throw std::invalid_argument("unknown relation sequence '" + name + "' (expected connected, trees, paths)");
  }
  for (int i = 2; i <= last; ++i) c.push_back(oracle::enumerate_spanning_structures(i, kind, force));
  return c;
}

std::vector<BigInt> parse_sequence_list(const std::string& text) {
  std::vector<BigInt> out;
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char ch) { return std::isspace(ch); }), item.end());
    if (item.empty()) throw std::invalid_argument("empty entry in sequence list '" + text + "'");
    out.push_back(from_decimal(item));
  }
  if (out.empty()) throw std::invalid_argument("empty sequence list");
  return out;
}

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string render_report(const VerifyReport& report, Format f) {
  if (f == Format::Json) {
    json checks = json::array();
    for (const auto& c : report.checks) checks.push_back(json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    json j{{"format_version", kFormatVersion}, {"command", "verify"}, {"suite", report.suite},
           {"passed", report.all_passed()}, {"checks", checks}};
    return j.dump(2) + "\n";
  }
  if (f == Format::Bfile) no_bfile("verify");
  std::string out;
  if (f == Format::Csv) {
    out = "check,verdict,detail\n";
    for (const auto& c : report.checks) out += c.name + "," + (c.passed ? "PASS" : "FAIL") + ",\"" + c.detail + "\"\n";
    return out;
  }
  for (const auto& c : report.checks) out += std::string(c.passed ? "PASS" : "FAIL") + "  " + c.name + "  " + c.detail + "\n";
  out += report.all_passed() ? "all checks passed\n" : "FAILURES present\n";
  return out;
}

}  // namespace convex_count::cli
