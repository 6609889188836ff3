#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "joinmeet/lattice.hpp"

namespace joinmeet::cli {

/// Exit codes: verdicts map to 0 (pass) / 1 (fail or none); bad input is 2.
enum ExitCode : int { kOk = 0, kVerdictFailed = 1, kInputError = 2 };

/// Runs the command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// `pentagon`, `diamond`, `chain`, `boolean`, `divisor`; `n` parametrises the last three.
Lattice builtin_lattice(const std::string& name, std::size_t n);

/// Parses `{"elements": [...], "covers": [[a, b], ...]}`.
Lattice parse_lattice_document(const std::string& text);

}  // namespace joinmeet::cli
