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

#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cpforce/sweep.hpp"

namespace cpforce {

enum class OutputFormat { Csv, Json };

std::optional<OutputFormat> parse_output_format(std::string_view text);

/// CSV header, exactly these columns in this order.
inline constexpr const char* kCsvHeader =
    "a_m,f_total_N,f_alpha_N,f_beta_N,a5_abs_f,deviation_pct,terms_l,est_rel_err";

/// Header plus one line per row; reals in %.11e (12 significant digits).
void write_csv(std::ostream& out, std::span<const SweepRow> rows);
std::vector<SweepRow> read_csv(std::istream& in);

/// Rows plus a metadata block echoing the spec, the constants table hash and
/// the library version. Numbers are written with round-trip precision.
/// `timestamp` is taken verbatim (empty string omits the field).
void write_json(std::ostream& out, std::span<const SweepRow> rows, const SweepSpec& spec,
                const std::string& timestamp);

struct JsonSweep {
  std::vector<SweepRow> rows;
  std::string artifact_version;
  std::string constants_hash;
};
JsonSweep read_json(std::istream& in);

/// Writes rows to `path` in the given format; throws IoError when the file
/// cannot be opened or written.
void emit(std::span<const SweepRow> rows, OutputFormat format, const std::filesystem::path& path,
          const SweepSpec& spec, const std::string& timestamp = {});

/// Library version string.
const char* version();

}  // namespace cpforce
