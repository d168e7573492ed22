#include "hyerslab/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "json.hpp"

namespace hyerslab {

std::size_t Report::failures() const {
  std::size_t f = 0;
  for (const auto& r : rows) f += r.pass ? 0 : 1;
  return f;
}

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

}  // namespace

void write_csv(std::ostream& out, const Report& report) {
  out << "# command: " << report.command << "\n";
  for (const auto& h : report.header) out << "# " << h << "\n";
  for (const auto& f : report.flags) out << "# flag: " << f << "\n";
  out << "scenario,point";
  for (const auto& c : report.columns) out << "," << c;
  out << ",pass\n";
  for (const auto& row : report.rows) {
    out << csv_field(row.scenario) << ",";
    for (std::size_t i = 0; i < row.point.size(); ++i) out << (i ? ";" : "") << format_real(row.point[i]);
    for (const auto& c : report.columns) {
      out << ",";
      if (auto it = row.values.find(c); it != row.values.end()) out << format_real(it->second);
    }
    out << "," << (row.pass ? "1" : "0") << "\n";
  }
}

void write_json(std::ostream& out, const Report& report) {
  using nlohmann::ordered_json;
  auto real = [](double v) -> ordered_json {
    if (std::isfinite(v)) return v;
    return nullptr;
  };
  ordered_json doc;
  ordered_json header;
  header["command"] = report.command;
  for (const auto& h : report.header) {
    const auto colon = h.find(": ");
    if (colon == std::string::npos) continue;
    header[h.substr(0, colon)] = h.substr(colon + 2);
  }
  doc["header"] = header;
  doc["flags"] = report.flags;
  ordered_json rows = ordered_json::array();
  for (const auto& row : report.rows) {
    ordered_json r;
    r["scenario"] = row.scenario;
    ordered_json pt = ordered_json::array();
    for (double v : row.point) pt.push_back(real(v));
    r["point"] = pt;
    ordered_json vals = ordered_json::object();
    for (const auto& c : report.columns)
      if (auto it = row.values.find(c); it != row.values.end()) vals[c] = real(it->second);
    r["values"] = vals;
    r["pass"] = row.pass;
    rows.push_back(std::move(r));
  }
  doc["rows"] = rows;
  out << doc.dump(2) << "\n";
}

}  // namespace hyerslab
