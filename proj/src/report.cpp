#include "rieszlab/report.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace rieszlab {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string to_csv(const std::vector<ConvergenceReport>& reports) {
  std::string out = kCsvHeader;
  out += '\n';
  for (const auto& rep : reports) {
    for (const auto& r : rep.rows) {
      out += rep.experiment;
      out += ',';
      out += rep.family;
      out += ',';
      out += format_double(r.param);
      out += ',';
      out += std::to_string(r.k_or_n);
      out += ',';
      out += format_double(r.value);
      out += ',';
      out += format_double(r.reference);
      out += ',';
      out += format_double(r.abs_err);
      out += ',';
      out += format_double(r.rel_err);
      out += ',';
      out += r.pass ? "1" : "0";
      out += '\n';
    }
  }
  return out;
}

std::string to_json(const std::vector<ConvergenceReport>& reports,
                    const std::map<std::string, std::string>& meta) {
  nlohmann::json doc;
  doc["meta"] = meta;
  doc["rows"] = nlohmann::json::array();
  for (const auto& rep : reports) {
    for (const auto& r : rep.rows) {
      doc["rows"].push_back({{"experiment", rep.experiment},
                             {"family", rep.family},
                             {"param", format_double(r.param)},
                             {"k_or_n", r.k_or_n},
                             {"value", format_double(r.value)},
                             {"reference", format_double(r.reference)},
                             {"abs_err", format_double(r.abs_err)},
                             {"rel_err", format_double(r.rel_err)},
                             {"pass", r.pass}});
    }
  }
  return doc.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << content;
  if (!f) throw std::runtime_error("write failed: " + path);
}

}  // namespace rieszlab
