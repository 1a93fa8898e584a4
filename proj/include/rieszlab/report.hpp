#pragma once

#include <map>

#include "rieszlab/transference.hpp"

// CSV/JSON serialization of convergence reports. Numbers are printed with
// %.17g so identical runs produce byte-identical files.

namespace rieszlab {

inline constexpr const char* kCsvHeader =
    "experiment,family,param,k_or_n,value,reference,abs_err,rel_err,pass";

std::string format_double(double v);

std::string to_csv(const std::vector<ConvergenceReport>& reports);

// One JSON object: {"meta": {...config echo...}, "rows": [...]}.
std::string to_json(const std::vector<ConvergenceReport>& reports,
                    const std::map<std::string, std::string>& meta);

void write_file(const std::string& path, const std::string& content);

}  // namespace rieszlab
