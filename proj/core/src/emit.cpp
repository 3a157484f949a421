// Copyright 2026 The cpforce Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cpforce/emit.hpp"

#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "cpforce/errors.hpp"
#include "cpforce/units.hpp"
#include "spec_json.hpp"

namespace cpforce {

using nlohmann::json;

std::optional<OutputFormat> parse_output_format(std::string_view text) {
  if (text == "csv") return OutputFormat::Csv;
  if (text == "json") return OutputFormat::Json;
  return std::nullopt;
}

void write_csv(std::ostream& out, std::span<const SweepRow> rows) {
  out << kCsvHeader << '\n';
  char line[512];
  for (const SweepRow& r : rows) {
    std::snprintf(line, sizeof line, "%.11e,%.11e,%.11e,%.11e,%.11e,%.11e,%zu,%.11e\n", r.a_m,
                  r.f_total_N, r.f_alpha_N, r.f_beta_N, r.a5_abs_f, r.deviation_pct, r.terms_l,
                  r.est_rel_err);
    out << line;
  }
}

namespace {

double parse_field(const std::string& text, std::size_t line_no) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0') {
    throw IoError("csv line " + std::to_string(line_no) + ": bad number '" + text + "'");
  }
  return v;
}

}  // namespace

std::vector<SweepRow> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw IoError("csv: missing or wrong header");
  std::vector<SweepRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 8) {
      throw IoError("csv line " + std::to_string(line_no) + ": expected 8 fields");
    }
    SweepRow r;
    r.a_m = parse_field(fields[0], line_no);
    r.f_total_N = parse_field(fields[1], line_no);
    r.f_alpha_N = parse_field(fields[2], line_no);
    r.f_beta_N = parse_field(fields[3], line_no);
    r.a5_abs_f = parse_field(fields[4], line_no);
    r.deviation_pct = parse_field(fields[5], line_no);
    r.terms_l = static_cast<std::size_t>(parse_field(fields[6], line_no));
    r.est_rel_err = parse_field(fields[7], line_no);
    rows.push_back(r);
  }
  return rows;
}

void write_json(std::ostream& out, std::span<const SweepRow> rows, const SweepSpec& spec,
                const std::string& timestamp) {
  char hash[32];
  std::snprintf(hash, sizeof hash, "%016" PRIx64, units::constants_table_hash());
  json meta = {{"artifact_version", version()},
               {"constants_hash", hash},
               {"spec", detail::spec_to_json(spec)}};
  if (!timestamp.empty()) meta["timestamp"] = timestamp;
  json jrows = json::array();
  for (const SweepRow& r : rows) {
    jrows.push_back({{"a_m", r.a_m},
                     {"f_total_N", r.f_total_N},
                     {"f_alpha_N", r.f_alpha_N},
                     {"f_beta_N", r.f_beta_N},
                     {"a5_abs_f", r.a5_abs_f},
                     {"deviation_pct", r.deviation_pct},
                     {"terms_l", r.terms_l},
                     {"est_rel_err", r.est_rel_err},
                     {"converged", r.converged}});
  }
  out << json{{"metadata", meta}, {"rows", jrows}}.dump(2) << '\n';
}

JsonSweep read_json(std::istream& in) {
  JsonSweep out;
  try {
    const json doc = json::parse(in);
    const json& meta = doc.at("metadata");
    out.artifact_version = meta.at("artifact_version").get<std::string>();
    out.constants_hash = meta.at("constants_hash").get<std::string>();
    for (const json& j : doc.at("rows")) {
      SweepRow r;
      r.a_m = j.at("a_m").get<double>();
      r.f_total_N = j.at("f_total_N").get<double>();
      r.f_alpha_N = j.at("f_alpha_N").get<double>();
      r.f_beta_N = j.at("f_beta_N").get<double>();
      r.a5_abs_f = j.at("a5_abs_f").get<double>();
      r.deviation_pct = j.at("deviation_pct").get<double>();
      r.terms_l = j.at("terms_l").get<std::size_t>();
      r.est_rel_err = j.at("est_rel_err").get<double>();
      r.converged = j.at("converged").get<bool>();
      out.rows.push_back(r);
    }
  } catch (const json::exception& e) {
    throw IoError(std::string("json: ") + e.what());
  }
  return out;
}

void emit(std::span<const SweepRow> rows, OutputFormat format, const std::filesystem::path& path,
          const SweepSpec& spec, const std::string& timestamp) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  if (format == OutputFormat::Csv) {
    write_csv(out, rows);
  } else {
    write_json(out, rows, spec, timestamp);
  }
  out.flush();
  if (!out) throw IoError("write to " + path.string() + " failed");
}

const char* version() { return CPFORCE_VERSION; }

}  // namespace cpforce
