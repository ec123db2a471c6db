#include "report.hpp"

#include <charconv>
#include <cstdlib>
#include <ctime>
#include <sstream>

namespace spinchain::cli {

Json to_json(cplx z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const CMatrix& m) {
  Json out = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const std::vector<cplx>& v) {
  Json out = Json::array();
  for (cplx z : v) out.push_back(to_json(z));
  return out;
}

std::string cell(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string cell(int v) { return std::to_string(v); }

std::string joined(const std::vector<int>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

void matrix_rows(Report& r, const CMatrix& m) {
  r.header = {"row", "col", "re", "im"};
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      r.rows.push_back({cell(static_cast<int>(i)), cell(static_cast<int>(j)), cell(m(i, j).real()), cell(m(i, j).imag())});
}

std::string manifest_timestamp() {
  std::time_t t = std::time(nullptr);
  if (const char* env = std::getenv("SOURCE_DATE_EPOCH")) t = static_cast<std::time_t>(std::strtoll(env, nullptr, 10));
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string render_json(const Json& manifest, const Report& r) {
  Json doc = Json::object();
  doc["manifest"] = manifest;
  doc["result"] = r.result;
  return doc.dump(2) + "\n";
}

namespace {

std::string quoted(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

}  // namespace

std::string render_csv(const Json& manifest, const Report& r) {
  std::ostringstream out;
  out << "# manifest: " << manifest.dump() << "\n";
  for (std::size_t i = 0; i < r.header.size(); ++i) out << (i ? "," : "") << quoted(r.header[i]);
  out << "\n";
  for (const auto& row : r.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << quoted(row[i]);
    out << "\n";
  }
  return out.str();
}

}  // namespace spinchain::cli
