// Copyright 2026 the esfstl authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>

#include "esf/report.hpp"

namespace esf {

/// Executes the configured run and assembles the report.  Throws ParseError
/// / DomainError / PrecisionLossError on the corresponding failures.
ReportBundle execute_run(const RunConfig& config);

/// Full CLI behaviour behind argv parsing: validates the dataset against
/// the declared k, executes, renders to `out` (TEXT always; JSON/CSV to
/// config.out_path when requested).  Returns the process exit code:
/// 0 success, 2 usage error, 3 data inconsistency, 4 numeric guard trip.
int run_cli(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace esf
