#pragma once

#include <complex>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace momo::cli {

/// One statistic at one parameter point.
struct Row {
  std::string statistic;
  nlohmann::json params = nlohmann::json::object();
  std::complex<double> value;
  std::uint64_t n_terms = 0;
  double wall_ms = 0.0;  // outside the determinism contract
};

inline constexpr const char* kCsvHeader =
    "experiment_id,suite,statistic,params_json,value_re,value_im,n_terms,wall_ms,version";

/// RFC 4180: quote fields holding a comma, quote, CR or LF; double inner quotes.
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string format_ms(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

inline void write_csv(std::ostream& out, const std::string& experiment_id, const std::string& suite,
                      const std::vector<Row>& rows, const std::string& version) {
  out << kCsvHeader << "\r\n";
  for (const Row& r : rows) {
    out << csv_field(experiment_id) << ',' << csv_field(suite) << ',' << csv_field(r.statistic) << ','
        << csv_field(r.params.dump()) << ',' << format_g17(r.value.real()) << ','
        << format_g17(r.value.imag()) << ',' << r.n_terms << ',' << format_ms(r.wall_ms) << ','
        << csv_field(version) << "\r\n";
  }
}

/// Splits one CSV record (no embedded line breaks) into fields.
inline std::vector<std::string> split_csv_record(const std::string& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else if (c != '\r') {
      fields.back() += c;
    }
  }
  return fields;
}

}  // namespace momo::cli
