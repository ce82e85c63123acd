// SPDX-License-Identifier: Apache-2.0
//
// ristwin - ray-traced digital twin for 1-bit RIS phase configuration
// Copyright (C) 2026 The ristwin authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "internal.hpp"
#include "ristwin_cli/cli.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <sstream>

namespace ristwin::cli
{
namespace
{

std::string utc_stamp(const char *format)
{
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, format, &tm);
    return buf;
}

} // namespace

std::string tool_version() { return std::string("ristwin ") + RISTWIN_VERSION; }

std::string read_text(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

json read_json(const std::string &path)
{
    const std::string text = read_text(path);
    try
    {
        return json::parse(text);
    }
    catch (const nlohmann::json::parse_error &e)
    {
        throw ParseError("'" + path + "' is not valid JSON: " + e.what());
    }
}

std::string round_trip(double value) { return json(value).dump(); }

RunDirectory::RunDirectory(const std::string &command, const std::optional<std::string> &out)
{
    namespace fs = std::filesystem;
    std::error_code ec;
    if (out)
    {
        path_ = *out;
    }
    else
    {
        const fs::path base = fs::path("runs") / (command + "-" + utc_stamp("%Y%m%dT%H%M%SZ"));
        path_ = base;
        for (int k = 2; fs::exists(path_, ec); ++k)
            path_ = base.string() + "-" + std::to_string(k);
    }
    fs::create_directories(path_, ec);
    if (ec || !fs::is_directory(path_))
        throw IoError("cannot create output directory '" + path_.string() + "'");
}

void RunDirectory::write(const std::string &name, const std::string &content) const
{
    const auto file = path_ / name;
    std::ofstream out(file, std::ios::binary | std::ios::trunc);
    out << content;
    out.close();
    if (!out)
        throw IoError("cannot write '" + file.string() + "'");
}

void RunDirectory::write_json(const std::string &name, const json &doc) const { write(name, doc.dump(2) + "\n"); }

void RunDirectory::write_manifest(const std::string &command, const std::string &scene_path,
                                  const json &parameters) const
{
    write_json("manifest.json", {{"command", command},
                                 {"scene_path", scene_path},
                                 {"parameters", parameters},
                                 {"tool_version", tool_version()},
                                 {"timestamp", utc_stamp("%Y-%m-%dT%H:%M:%SZ")}});
}

} // namespace ristwin::cli
