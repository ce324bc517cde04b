// Copyright 2026 the esfstl authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>

#include "esf/haplotype.hpp"

namespace esf {

/// Parses a haplotype-count dataset: whitespace-separated positive
/// integers, newlines allowed, '#' starts a comment to end of line.
/// Throws ParseError with line/column on malformed input, nonpositive
/// counts, or an empty file.
HaplotypeConfig parse_dataset(std::istream& in, const std::string& name = "<stream>");

HaplotypeConfig parse_dataset_file(const std::string& path);

}  // namespace esf
