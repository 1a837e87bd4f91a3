#pragma once

#include <cstdio>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace abf {

/// Shortest-faithful decimal form with at least 15 significant digits;
/// locale-independent.
inline std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

/// Minimal CSV emitter: header row first, '.' decimal point, LF line ends,
/// no quoting (fields are numeric or plain tokens).
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  void header(std::span<const char* const> names) {
    for (size_t i = 0; i < names.size(); ++i) {
      if (i) out_ << ',';
      out_ << names[i];
    }
    out_ << '\n';
  }

  /// Writes one row of numeric fields; empty optional cells are passed as
  /// preformatted strings via row_raw.
  void row(std::span<const double> fields) {
    for (size_t i = 0; i < fields.size(); ++i) {
      if (i) out_ << ',';
      out_ << format_value(fields[i]);
    }
    out_ << '\n';
  }

  void row_raw(std::span<const std::string> fields) {
    for (size_t i = 0; i < fields.size(); ++i) {
      if (i) out_ << ',';
      out_ << fields[i];
    }
    out_ << '\n';
  }

 private:
  std::ostream& out_;
};

}  // namespace abf
