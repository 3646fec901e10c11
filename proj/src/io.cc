// Copyright 2026 The qsm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qsm/io.h"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace qsm {

std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open '" + path.string() + "' for reading");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::filesystem::path &path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) {
        throw std::runtime_error("cannot write '" + path.string() + "'");
    }
}

Dictionary parse_dictionary(std::string_view contents) {
    std::vector<std::string> patterns;
    std::size_t line = 1;
    while (!contents.empty()) {
        const std::size_t end = contents.find('\n');
        const std::string_view pattern = contents.substr(0, end);
        if (pattern.empty()) {
            throw std::invalid_argument("dictionary line " + std::to_string(line) + " is empty");
        }
        patterns.emplace_back(pattern);
        if (end == std::string_view::npos) {
            break;
        }
        contents.remove_prefix(end + 1);
        line++;
    }
    return Dictionary(std::move(patterns));
}

std::string format_dictionary(const Dictionary &dictionary) {
    std::string out;
    for (const std::string &p : dictionary.patterns()) {
        out += p;
        out += '\n';
    }
    return out;
}

std::string format_tsv(const MatchReport &report) {
    std::string out;
    for (std::size_t j = 0; j < report.occurrences.size(); j++) {
        out += std::to_string(j + 1);
        out += '\t';
        const auto &positions = report.occurrences[j];
        for (std::size_t k = 0; k < positions.size(); k++) {
            if (k > 0) {
                out += ',';
            }
            out += std::to_string(positions[k]);
        }
        out += '\n';
    }
    return out;
}

std::string format_json(const MatchReport &report) {
    nlohmann::json out = nlohmann::json::array();
    for (std::size_t j = 0; j < report.occurrences.size(); j++) {
        out.push_back({{"pattern_index", j + 1}, {"positions", report.occurrences[j]}});
    }
    return out.dump() + "\n";
}

}  // namespace qsm
