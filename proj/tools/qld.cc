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

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "qld/commands.h"
#include "qld/config.h"
#include "qld/errors.h"

int main(int argc, char **argv) {
    CLI::App app{"Quantum list-decoding simulator"};
    app.require_subcommand(1);
    app.fallthrough();

    std::map<std::string, std::string> flags;
    std::string config_path;
    app.add_option("--config", config_path, "key = value config file; flags override it");
    for (const std::string &key : qld::config_keys()) {
        app.add_option_function<std::string>(
            "--" + key, [&flags, key](const std::string &v) { flags[key] = v; }, "config key " + key);
    }

    std::map<std::string, CLI::App *> subs;
    subs["bounds"] = app.add_subcommand("bounds", "Johnson bound, sigma, repetitions and query bound");
    subs["listdecode"] = app.add_subcommand("listdecode", "Run the list decoder over trials and emit a CSV");
    subs["decode-state"] = app.add_subcommand("decode-state", "Decode one codeword state");
    subs["presence"] = app.add_subcommand("presence", "Presence and best shuffle per message");
    subs["gen-legendre"] = app.add_subcommand("gen-legendre", "Print a shifted Legendre codeword");
    subs["invert-demo"] = app.add_subcommand("invert-demo", "Invert a toy function from a predictor");
    subs["johnson-check"] = app.add_subcommand("johnson-check", "Brute-force check of the Johnson bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : qld::kExitConfig;
    }

    qld::ExperimentConfig cfg;
    try {
        if (!config_path.empty()) {
            cfg = qld::ExperimentConfig::parse_file(config_path);
        }
        qld::ExperimentConfig overrides;
        for (const auto &[key, value] : flags) {
            overrides.set(key, value);
        }
        cfg.merge(overrides);
    } catch (const qld::InvalidArgument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return qld::kExitConfig;
    }

    for (const auto &[name, sub] : subs) {
        if (sub->parsed()) {
            return qld::run_command(name, cfg, std::cout, std::cerr);
        }
    }
    return qld::kExitConfig;
}
