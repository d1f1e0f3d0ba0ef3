// Copyright (c) 2026 The dnsk Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dnsk {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2 };

/// Runs `dnsk ARGS...` (without the program name). Reports go to `out`,
/// diagnostics to `err`; output is deterministic.
///
///   check FILE [--json] [--tree]
///   translate --mode kuroda|kuroda-inner|mr|mrt|dia|dia-nn|spector [--simplify] FILE
///   extract FILE
///   eval FILE [--trace] [--fuel N]      (default fuel: $DNSK_FUEL or 1000)
///   library [--list | --check NAME | --check-all | --mutants]
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace dnsk
