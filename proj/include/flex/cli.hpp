#pragma once

#include <iosfwd>

namespace flex {

// Exit codes of run_cli.
enum ExitCode : int {
    ExitOk = 0,
    ExitParse = 1,          // unreadable file, bad flag, unknown id
    ExitClass = 2,          // graph outside the class, or discharging mode violation
    ExitStuck = 3,          // no verified configuration on some component
    ExitInvariant = 4,      // a verified guarantee failed, or an audit contradiction
};

// Subcommands: detect, verify-config, resolve, color, flex, discharge, audit,
// gen. Graph arguments are `planegraph v1` files or `named:<name>[:<n>]`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace flex
