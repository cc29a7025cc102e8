//------------------------------------------------------------------------------
//
//   Copyright 2026 The d2dsim Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace d2dsim {

/// Shortest decimal string that round-trips back to the same double.
/// Always uses '.' as the decimal separator, independent of locale.
std::string format_double(double value);

std::string format_int(std::int64_t value);

/// One CSV table: a header row plus data rows.  Cells are written verbatim,
/// rows joined with ',' and terminated with '\n'.
struct CsvTable
{
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string to_string() const;
};

/// Writes content to path atomically: the bytes land in a sibling temp file
/// first and are renamed over the target, so readers never observe a partially
/// written file.  Parent directories are created as needed.
/// Throws IoError on any filesystem failure.
void write_file_atomic(std::filesystem::path const &path,
                       std::string const &content);

/// Reads a whole file into a string.  Throws IoError if it cannot be opened.
std::string read_file(std::filesystem::path const &path);

void write_csv(std::filesystem::path const &path, CsvTable const &table);

}  // namespace d2dsim
