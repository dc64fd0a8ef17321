// Copyright 2026 The qlistdec Authors
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

#ifndef QLD_COMMANDS_H
#define QLD_COMMANDS_H

#include <ostream>
#include <string>
#include <vector>

#include "qld/codes.h"
#include "qld/config.h"
#include "qld/decoders.h"

namespace qld {

enum ExitCode : int {
    kExitOk = 0,
    kExitNotFound = 1,
    kExitConfig = 2,
    kExitInapplicable = 3,
    kExitInternal = 4,
};

/// Command handlers. Each reads what it needs from cfg, writes results to
/// out and diagnostics to err, and returns an ExitCode. Library exceptions
/// propagate; run_command maps them.
int cmd_bounds(ExperimentConfig cfg, std::ostream &out, std::ostream &err);
int cmd_listdecode(ExperimentConfig cfg, std::ostream &out, std::ostream &err);
int cmd_decode_state(ExperimentConfig cfg, std::ostream &out, std::ostream &err);
int cmd_presence(ExperimentConfig cfg, std::ostream &out, std::ostream &err);
int cmd_gen_legendre(ExperimentConfig cfg, std::ostream &out, std::ostream &err);
int cmd_invert_demo(ExperimentConfig cfg, std::ostream &out, std::ostream &err);
int cmd_johnson_check(ExperimentConfig cfg, std::ostream &out, std::ostream &err);

/// Dispatches by name and converts exceptions to exit codes with a one-line
/// diagnostic on err.
int run_command(const std::string &name, const ExperimentConfig &cfg, std::ostream &out, std::ostream &err);

const std::vector<std::string> &command_names();

/// Code selected by cfg.code and its parameters.
CodePtr code_from_config(const ExperimentConfig &cfg);

/// Whitespace-separated f(0), f(1), ...
std::vector<uint64_t> read_function_table(const std::string &path);

}  // namespace qld

#endif
