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

#ifndef QSM_IO_H
#define QSM_IO_H

#include <filesystem>
#include <string>
#include <string_view>

#include "qsm/matcher.h"

namespace qsm {

/// Whole file as raw bytes. Throws std::runtime_error if unreadable.
std::string read_file(const std::filesystem::path &path);
void write_file(const std::filesystem::path &path, std::string_view contents);

/// One pattern per line. The final newline is optional; empty lines are
/// rejected with std::invalid_argument.
Dictionary parse_dictionary(std::string_view contents);
std::string format_dictionary(const Dictionary &dictionary);

/// "<j>\t<p1>,<p2>,...\n" per pattern, j 1-indexed.
std::string format_tsv(const MatchReport &report);
/// [{"pattern_index": j, "positions": [...]}, ...]
std::string format_json(const MatchReport &report);

}  // namespace qsm

#endif  // QSM_IO_H
