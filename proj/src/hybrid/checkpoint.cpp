// Copyright 2026 The qsac authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qsac/checkpoint.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "qsac/errors.hpp"

namespace qsac::hybrid {

namespace {
constexpr const char *kMagic = "qsac-checkpoint v1";

[[noreturn]] void fail(const std::string &path, std::size_t line,
                       const std::string &why) {
    std::ostringstream os;
    os << path << ":" << line << ": " << why;
    throw ParseError(os.str());
}
} // namespace

const std::vector<double> *Checkpoint::find(const std::string &name) const {
    for (const auto &[n, v] : vectors) {
        if (n == name) {
            return &v;
        }
    }
    return nullptr;
}

const std::string &Checkpoint::need_meta(const std::string &key) const {
    auto it = meta.find(key);
    if (it == meta.end()) {
        throw ParseError("checkpoint is missing meta key \"" + key + "\"");
    }
    return it->second;
}

void save_checkpoint(const std::string &path, const Checkpoint &cp) {
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot open checkpoint file for writing: " + path);
    }
    out << kMagic << "\n";
    for (const auto &[key, value] : cp.meta) {
        out << "meta " << key << " " << value << "\n";
    }
    char buf[40];
    for (const auto &[name, values] : cp.vectors) {
        out << "vector " << name << " " << values.size() << "\n";
        for (double v : values) {
            std::snprintf(buf, sizeof buf, "%.17g", v);
            out << buf << "\n";
        }
    }
    out << "end\n";
    if (!out.good()) {
        throw Error("write failure on checkpoint file: " + path);
    }
}

Checkpoint load_checkpoint(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open checkpoint file: " + path);
    }
    std::string line;
    std::size_t lineno = 0;
    auto next_line = [&]() -> bool {
        if (!std::getline(in, line)) {
            return false;
        }
        ++lineno;
        return true;
    };
    if (!next_line() || line != kMagic) {
        fail(path, lineno, "bad checkpoint header");
    }
    Checkpoint cp;
    bool saw_end = false;
    while (next_line()) {
        if (line.empty()) {
            continue;
        }
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "meta") {
            std::string key;
            ls >> key;
            if (key.empty()) {
                fail(path, lineno, "meta line without a key");
            }
            std::string value;
            std::getline(ls, value);
            if (!value.empty() && value.front() == ' ') {
                value.erase(value.begin());
            }
            cp.meta[key] = value;
        } else if (tag == "vector") {
            std::string name;
            std::size_t count = 0;
            ls >> name >> count;
            if (name.empty() || ls.fail()) {
                fail(path, lineno, "malformed vector header");
            }
            std::vector<double> values(count);
            for (std::size_t i = 0; i < count; ++i) {
                if (!next_line()) {
                    fail(path, lineno, "truncated vector \"" + name + "\"");
                }
                char *endp = nullptr;
                values[i] = std::strtod(line.c_str(), &endp);
                if (endp == line.c_str()) {
                    fail(path, lineno, "bad numeric literal");
                }
            }
            cp.vectors.emplace_back(std::move(name), std::move(values));
        } else if (tag == "end") {
            saw_end = true;
            break;
        } else {
            fail(path, lineno, "unknown record \"" + tag + "\"");
        }
    }
    if (!saw_end) {
        fail(path, lineno, "missing end marker");
    }
    return cp;
}

} // namespace qsac::hybrid
