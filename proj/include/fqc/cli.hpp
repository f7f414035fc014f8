/*
   Copyright 2026 The fqcurves Authors

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

#ifndef FQC_CLI_HPP
#define FQC_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace fqc::cli {

enum ExitCode : int { kPass = 0, kUsage = 1, kCheckFailed = 2, kIo = 3 };

enum class Format { Text, Json, Csv };

struct RunConfig {
    std::string subcommand;
    std::string field = "2";
    Format format = Format::Text;
    std::string output; // empty: standard output
    int threads = 0;    // 0: OpenMP default
    std::uint64_t seed = 0;
    std::uint64_t budget = 0; // resolved from --budget, FQC_BUDGET or the default
};

// Runs one command line (without the program name). Results go to `out`
// unless --output is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fqc::cli

#endif
