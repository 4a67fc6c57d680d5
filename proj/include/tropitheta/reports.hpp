#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tropitheta/json_io.hpp"

namespace tropitheta {

struct ReportOptions {
  std::string mode = "exact";  // exact|sampled
  long resolution = 20;
  long window = 6;
};

struct Report {
  json body;
  std::vector<std::pair<std::string, std::string>> files;  // figure name, SVG text
  int status = 0;                                          // 3 when a certificate or lift check fails
};

// Each takes the parsed input payload of the matching command.
Report type_report(const json& in);
Report theta_report(const json& in);
Report embed_report(const json& in);
Report certify_report(const json& in, const ReportOptions& opt);
Report voronoi_report(const json& in);
Report lift_report(const json& in, const ReportOptions& opt);
Report example_report(long d, const Rational& varpi, const ReportOptions& opt);

}  // namespace tropitheta
