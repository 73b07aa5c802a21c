#include "growthlab/cli/zero_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "growthlab/error.hpp"
#include "json.hpp"

namespace growthlab::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& field, std::size_t line) {
  const auto s = trim(field);
  double v = 0.0;
  const char* begin = s.data();
  if (!s.empty() && s.front() == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v))
    fail(ErrorKind::ParseError, "line " + std::to_string(line) + ": bad number '" + s + "'");
  return v;
}

int to_multiplicity(const std::string& field, std::size_t line) {
  const auto s = trim(field);
  int m = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), m);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || m < 1)
    fail(ErrorKind::ParseError, "line " + std::to_string(line) + ": multiplicity must be an integer >= 1");
  return m;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

points::PointDistribution read_zeros_csv(std::istream& in, double merge_radius) {
  std::string line;
  std::size_t lineno = 0;
  bool header = false;
  std::vector<points::PointMass> pts;
  while (std::getline(in, line)) {
    ++lineno;
    if (lineno == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    const auto t = trim(line);
    if (t.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(t);
    std::string f;
    while (std::getline(ss, f, ',')) fields.push_back(f);
    if (!header) {
      if (fields.size() != 3 || trim(fields[0]) != "re" || trim(fields[1]) != "im" ||
          trim(fields[2]) != "multiplicity")
        fail(ErrorKind::ParseError, "expected header 're,im,multiplicity'");
      header = true;
      continue;
    }
    if (fields.size() != 3)
      fail(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": expected 3 fields");
    pts.push_back({{to_double(fields[0], lineno), to_double(fields[1], lineno)},
                   to_multiplicity(fields[2], lineno)});
  }
  if (!header) fail(ErrorKind::ParseError, "empty zero list (header missing)");
  return points::PointDistribution::from_points(pts, 0, merge_radius);
}

void write_zeros_csv(std::ostream& out, const points::PointDistribution& z) {
  out << "re,im,multiplicity\n";
  if (z.origin_multiplicity() > 0) out << "0,0," << z.origin_multiplicity() << "\n";
  for (const auto& e : z.entries())
    out << fmt(e.point.real()) << "," << fmt(e.point.imag()) << "," << e.multiplicity << "\n";
}

points::PointDistribution read_zeros_json(std::istream& in, double merge_radius) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, std::string("zero list JSON: ") + e.what());
  }
  if (!doc.is_array()) fail(ErrorKind::ParseError, "zero list JSON must be an array");
  std::vector<points::PointMass> pts;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& item = doc[i];
    if (!item.is_object() || !item.contains("re") || !item.contains("im") || !item["re"].is_number() ||
        !item["im"].is_number())
      fail(ErrorKind::ParseError, "entry " + std::to_string(i) + ": needs numeric re and im");
    int m = 1;
    if (item.contains("mult")) {
      if (!item["mult"].is_number_integer() || item["mult"].get<long long>() < 1)
        fail(ErrorKind::ParseError, "entry " + std::to_string(i) + ": mult must be an integer >= 1");
      m = item["mult"].get<int>();
    }
    pts.push_back({{item["re"].get<double>(), item["im"].get<double>()}, m});
  }
  return points::PointDistribution::from_points(pts, 0, merge_radius);
}

void write_zeros_json(std::ostream& out, const points::PointDistribution& z) {
  nlohmann::json doc = nlohmann::json::array();
  if (z.origin_multiplicity() > 0) doc.push_back({{"re", 0.0}, {"im", 0.0}, {"mult", z.origin_multiplicity()}});
  for (const auto& e : z.entries())
    doc.push_back({{"re", e.point.real()}, {"im", e.point.imag()}, {"mult", e.multiplicity}});
  out << doc.dump(2) << "\n";
}

points::PointDistribution read_zeros_file(const std::filesystem::path& path, double merge_radius) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot open zero list " + path.string());
  if (path.extension() == ".json") return read_zeros_json(in, merge_radius);
  return read_zeros_csv(in, merge_radius);
}

}  // namespace growthlab::cli
