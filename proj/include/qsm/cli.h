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

#ifndef QSM_CLI_H
#define QSM_CLI_H

#include <iosfwd>

namespace qsm {

/// Entry point of the `qsm` tool (subcommands match, verify, bench, replay).
/// Returns the process exit status.
int cli_main(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace qsm

#endif  // QSM_CLI_H
