// Copyright 2026 the esfstl authors
// SPDX-License-Identifier: Apache-2.0

#include "esf/dataset.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "esf/error.hpp"

namespace esf {

HaplotypeConfig parse_dataset(std::istream& in, const std::string& name) {
  HaplotypeConfig config;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::size_t col = 0;
    while (col < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[col]))) {
        ++col;
        continue;
      }
      std::size_t end = col;
      while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) ++end;
      const std::string token = line.substr(col, end - col);
      std::size_t used = 0;
      long value = 0;
      try {
        value = std::stol(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size()) {
        std::ostringstream msg;
        msg << name << ":" << line_no << ":" << (col + 1) << ": expected an integer, got '"
            << token << "'";
        throw ParseError(msg.str());
      }
      if (value < 1) {
        std::ostringstream msg;
        msg << name << ":" << line_no << ":" << (col + 1) << ": haplotype counts must be positive ("
            << value << ")";
        throw ParseError(msg.str());
      }
      config.counts.push_back(static_cast<int>(value));
      col = end;
    }
  }
  if (config.counts.empty()) throw ParseError(name + ": no haplotype counts found");
  return config;
}

HaplotypeConfig parse_dataset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open dataset");
  return parse_dataset(in, path);
}

}  // namespace esf
