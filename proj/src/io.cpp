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

#include "d2dsim/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

#include "d2dsim/errors.hpp"

namespace d2dsim {

std::string format_double(double value)
{
  // to_chars produces the shortest representation that parses back exactly,
  // with no locale dependence.  Buffer is generous for any double.
  char buf[64];
  auto const res = std::to_chars(buf, buf + sizeof(buf), value);
  if (res.ec != std::errc())
  {
    throw IoError("failed to format double value");
  }
  return std::string(buf, res.ptr);
}

std::string format_int(std::int64_t value)
{
  char buf[32];
  auto const res = std::to_chars(buf, buf + sizeof(buf), value);
  if (res.ec != std::errc())
  {
    throw IoError("failed to format integer value");
  }
  return std::string(buf, res.ptr);
}

std::string CsvTable::to_string() const
{
  std::string out;
  auto append_row = [&out](std::vector<std::string> const &cells) {
    for (std::size_t i = 0; i < cells.size(); ++i)
    {
      if (i > 0)
      {
        out += ',';
      }
      out += cells[i];
    }
    out += '\n';
  };
  append_row(header);
  for (auto const &row : rows)
  {
    append_row(row);
  }
  return out;
}

void write_file_atomic(std::filesystem::path const &path,
                       std::string const &content)
{
  namespace fs = std::filesystem;

  fs::path const parent = path.parent_path();
  std::error_code ec;
  if (!parent.empty())
  {
    fs::create_directories(parent, ec);
    if (ec)
    {
      throw IoError("cannot create directory '" + parent.string() +
                    "': " + ec.message());
    }
  }

  fs::path const tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out)
    {
      throw IoError("cannot open '" + tmp.string() + "' for writing");
    }
    out.write(content.data(),
              static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out)
    {
      throw IoError("failed writing '" + tmp.string() + "'");
    }
  }

  fs::rename(tmp, path, ec);
  if (ec)
  {
    fs::remove(tmp, ec);
    throw IoError("cannot rename temp file onto '" + path.string() + "'");
  }
}

std::string read_file(std::filesystem::path const &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
  {
    throw IoError("cannot open '" + path.string() + "' for reading");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_csv(std::filesystem::path const &path, CsvTable const &table)
{
  write_file_atomic(path, table.to_string());
}

}  // namespace d2dsim
