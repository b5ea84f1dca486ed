/*
   Copyright 2026 The spotty Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// The spotty command-line front end, kept as a library so tests can drive
// it in-process.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "spotty/oracle.hpp"

namespace spotty::cli {

enum ExitCode : int {
  kOk = 0,
  kParseFailure = 2,
  kResourceFailure = 3,
  kIntegrityFailure = 4,
  kVerificationFailure = 5,
};

enum class Format { kText, kJson, kCsv };

struct RunConfig {
  std::string command;
  std::string input;
  Format format = Format::kText;
  std::uint64_t max_space = std::uint64_t{1} << 28;
  unsigned workers = 1;
  std::uint64_t seed = 1;
  std::string out;
  // dual: where to write every dual codeword, one per line.
  std::string codewords;
  // tables / info
  unsigned m = 0;
  unsigned b = 0;
  unsigned t = 0;
  // verify
  CampaignGrid grid;
  std::optional<std::uint32_t> fault;
};

// Runs one command and returns its report. Throws spotty::Error subclasses
// on failure; nothing is written anywhere.
std::string execute(const RunConfig& config, int& exit_code);

// Parses argv-style arguments (without the program name), runs the command
// and writes the report to out (or to --out). Diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spotty::cli
