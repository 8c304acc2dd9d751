// Copyright 2026 The qsac authors.
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

#include "qsac/textio.hpp"

#include <cerrno>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <system_error>

#include "qsac/errors.hpp"

namespace qsac::io {

std::string format_double(double value) {
    char buf[64];
    // Fixed notation for everyday magnitudes keeps files human-shaped
    // ("0.0003", not "3e-04"); both forms are shortest-round-trip, so
    // parsing recovers the exact bits either way.
    const double mag = value < 0.0 ? -value : value;
    const bool fixed = value == 0.0 || (mag >= 1e-5 && mag < 1e16);
    const auto res =
        fixed ? std::to_chars(buf, buf + sizeof(buf), value,
                              std::chars_format::fixed)
              : std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string &text, const std::string &what) {
    if (text.empty()) {
        throw ParseError("empty value for " + what);
    }
    errno = 0;
    char *end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size() || errno == ERANGE) {
        throw ParseError("bad number '" + text + "' for " + what);
    }
    return v;
}

long long parse_integer(const std::string &text, const std::string &what) {
    if (text.empty()) {
        throw ParseError("empty value for " + what);
    }
    long long v = 0;
    const auto res =
        std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
        throw ParseError("bad integer '" + text + "' for " + what);
    }
    return v;
}

void ensure_directory(const std::string &path) {
    std::error_code ec;
    std::filesystem::create_directories(path, ec);
    if (ec) {
        throw Error("cannot create directory " + path + ": " + ec.message());
    }
}

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open " + path);
    }
    std::ostringstream out;
    out << in.rdbuf();
    if (in.bad()) {
        throw Error("read failed on " + path);
    }
    return out.str();
}

void write_text_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error("cannot open " + path + " for writing");
    }
    out << content;
    out.flush();
    if (!out) {
        throw Error("write failed on " + path);
    }
}

std::vector<std::string> split_csv_line(const std::string &line) {
    std::vector<std::string> fields;
    std::string::size_type start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return fields;
}

const char kEpisodeCsvHeader[] =
    "run_id,seed,episode,steps,return,solved,wall_ms";

std::string episode_csv(const std::vector<EpisodeRow> &rows) {
    std::string out(kEpisodeCsvHeader);
    out.push_back('\n');
    for (const EpisodeRow &r : rows) {
        out += r.run_id;
        out.push_back(',');
        out += std::to_string(r.seed);
        out.push_back(',');
        out += std::to_string(r.episode);
        out.push_back(',');
        out += std::to_string(r.steps);
        out.push_back(',');
        out += format_double(r.episode_return);
        out.push_back(',');
        out += r.solved ? '1' : '0';
        out.push_back(',');
        out += std::to_string(r.wall_ms);
        out.push_back('\n');
    }
    return out;
}

void write_episode_csv(const std::string &path,
                       const std::vector<EpisodeRow> &rows) {
    write_text_file(path, episode_csv(rows));
}

namespace {

// Reads all non-empty lines and checks the header against `header`.
std::vector<std::string> csv_body(const std::string &path,
                                  const std::string &header) {
    const std::string text = read_text_file(path);
    std::vector<std::string> lines;
    std::string::size_type start = 0;
    while (start < text.size()) {
        auto nl = text.find('\n', start);
        if (nl == std::string::npos) {
            nl = text.size();
        }
        std::string line = text.substr(start, nl - start);
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (!line.empty()) {
            lines.push_back(std::move(line));
        }
        start = nl + 1;
    }
    if (lines.empty()) {
        throw ParseError(path + ": empty CSV");
    }
    if (lines.front() != header) {
        throw ParseError(path + ": unexpected header '" + lines.front() +
                         "'");
    }
    lines.erase(lines.begin());
    return lines;
}

} // namespace

std::vector<EpisodeRow> read_episode_csv(const std::string &path) {
    const auto lines = csv_body(path, kEpisodeCsvHeader);
    std::vector<EpisodeRow> rows;
    rows.reserve(lines.size());
    for (const std::string &line : lines) {
        const auto f = split_csv_line(line);
        if (f.size() != 7) {
            throw ParseError(path + ": expected 7 fields, got " +
                             std::to_string(f.size()) + " in '" + line + "'");
        }
        EpisodeRow r;
        r.run_id = f[0];
        r.seed = static_cast<std::uint64_t>(parse_integer(f[1], "seed"));
        r.episode = static_cast<int>(parse_integer(f[2], "episode"));
        r.steps = static_cast<int>(parse_integer(f[3], "steps"));
        r.episode_return = parse_double(f[4], "return");
        const long long solved = parse_integer(f[5], "solved");
        if (solved != 0 && solved != 1) {
            throw ParseError(path + ": solved must be 0 or 1");
        }
        r.solved = solved == 1;
        r.wall_ms = parse_integer(f[6], "wall_ms");
        rows.push_back(std::move(r));
    }
    return rows;
}

std::string curve_csv(const std::vector<CurvePoint> &points) {
    std::string out("episode,mean_return,std_return\n");
    for (const CurvePoint &p : points) {
        out += std::to_string(p.episode);
        out.push_back(',');
        out += format_double(p.mean_return);
        out.push_back(',');
        out += format_double(p.std_return);
        out.push_back('\n');
    }
    return out;
}

void write_curve_csv(const std::string &path,
                     const std::vector<CurvePoint> &points) {
    write_text_file(path, curve_csv(points));
}

std::vector<CurvePoint> read_curve_csv(const std::string &path) {
    const auto lines = csv_body(path, "episode,mean_return,std_return");
    std::vector<CurvePoint> points;
    points.reserve(lines.size());
    for (const std::string &line : lines) {
        const auto f = split_csv_line(line);
        if (f.size() != 3) {
            throw ParseError(path + ": expected 3 fields in '" + line + "'");
        }
        CurvePoint p;
        p.episode = static_cast<int>(parse_integer(f[0], "episode"));
        p.mean_return = parse_double(f[1], "mean_return");
        p.std_return = parse_double(f[2], "std_return");
        points.push_back(p);
    }
    return points;
}

std::string benchmark_csv(const std::vector<BenchmarkRow> &rows) {
    std::string out("episode,target_x,target_y,steps,return,solved\n");
    for (const BenchmarkRow &r : rows) {
        out += std::to_string(r.episode);
        out.push_back(',');
        out += format_double(r.target_x);
        out.push_back(',');
        out += format_double(r.target_y);
        out.push_back(',');
        out += std::to_string(r.steps);
        out.push_back(',');
        out += format_double(r.episode_return);
        out.push_back(',');
        out += r.solved ? '1' : '0';
        out.push_back('\n');
    }
    return out;
}

void write_benchmark_csv(const std::string &path,
                         const std::vector<BenchmarkRow> &rows) {
    write_text_file(path, benchmark_csv(rows));
}

} // namespace qsac::io
