#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "spinchain/linop.hpp"

namespace spinchain::cli {

using Json = nlohmann::ordered_json;

/// Output of one command: the JSON result plus a flat table for --format csv.
struct Report {
  Json result = Json::object();
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  bool verified = true;  ///< false when some residual exceeded the tolerance
};

Json to_json(cplx z);
Json to_json(const CMatrix& m);
Json to_json(const std::vector<cplx>& v);

std::string cell(double v);
std::string cell(int v);
std::string joined(const std::vector<int>& v, const char* sep = " ");

/// Appends one (row, col, re, im) line per matrix entry.
void matrix_rows(Report& r, const CMatrix& m);

/// SOURCE_DATE_EPOCH when set, else the current time, as ISO 8601 UTC.
std::string manifest_timestamp();

std::string render_json(const Json& manifest, const Report& r);
std::string render_csv(const Json& manifest, const Report& r);

}  // namespace spinchain::cli
