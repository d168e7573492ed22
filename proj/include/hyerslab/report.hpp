#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace hyerslab {

struct ReportRow {
  std::string scenario;
  std::vector<double> point;
  std::map<std::string, double> values;
  bool pass = true;
};

struct Report {
  std::string command;
  std::vector<std::string> columns;  // value columns, in output order
  std::vector<std::string> header;   // "key: value" metadata lines
  std::vector<std::string> flags;    // discrepancy notes raised by the run
  std::vector<ReportRow> rows;

  std::size_t failures() const;
};

/// Header comment lines, then "scenario,point,<columns...>,pass".
/// Points are ';'-joined. Reals use 17 significant digits; absent values are
/// empty cells.
void write_csv(std::ostream& out, const Report& report);

/// {"header": {...}, "flags": [...], "rows": [ReportRow...]}
void write_json(std::ostream& out, const Report& report);

std::string format_real(double v);

}  // namespace hyerslab
